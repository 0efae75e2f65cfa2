#include "dl4x/owlxml.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "dl4x/errors.hpp"
#include "dl4x/logic.hpp"

namespace dl4x {

namespace pt = boost::property_tree;
using namespace dl;

namespace {

struct Namespace {
  std::string_view iri;
  std::string_view prefix;
};

constexpr std::array kStandardNamespaces{
    Namespace{"http://www.w3.org/2001/XMLSchema#", "xsd"},
    Namespace{"http://www.w3.org/1999/02/22-rdf-syntax-ns#", "rdf"},
    Namespace{"http://www.w3.org/2000/01/rdf-schema#", "rdfs"},
    Namespace{"http://www.w3.org/2002/07/owl#", "owl"},
};

constexpr std::string_view kOwlNamespace = "http://www.w3.org/2002/07/owl#";

std::string_view strip_prefix(std::string_view element) {
  auto colon = element.find(':');
  return colon == std::string_view::npos ? element : element.substr(colon + 1);
}

// Element children of a node, skipping attributes and comments.
std::vector<std::pair<std::string, const pt::ptree*>> elements(const pt::ptree& node) {
  std::vector<std::pair<std::string, const pt::ptree*>> out;
  for (const auto& [key, child] : node) {
    if (key.empty() || key[0] == '<') continue;
    out.emplace_back(std::string(strip_prefix(key)), &child);
  }
  return out;
}

std::optional<std::string> attribute(const pt::ptree& node, const std::string& name) {
  auto v = node.get_optional<std::string>(pt::ptree::path_type("<xmlattr>/" + name, '/'));
  if (!v) return std::nullopt;
  return *v;
}

class Reader {
 public:
  explicit Reader(const ReadOptions& options) : options_(options) {}

  KnowledgeBase read(const pt::ptree& doc) {
    const pt::ptree* ontology = nullptr;
    for (const auto& [name, node] : elements(doc))
      if (name == "Ontology") ontology = node;
    if (!ontology) throw XmlError(1, "missing Ontology root element");

    std::size_t index = 0;
    for (const auto& [name, node] : elements(*ontology)) {
      ++index;
      location_ = "axiom " + std::to_string(index) + " <" + name + ">";
      element_ = name;
      axiom(name, *node);
    }
    if (!options_.auto_declare) check_declared();
    kb_.declare_used_names();
    return std::move(kb_);
  }

 private:
  [[noreturn]] void unsupported(const std::string& what) const { throw UnsupportedAxiom(what, location_); }

  void add(Axiom a) {
    if (auto rule = check_statement(a)) throw UnsupportedAxiom(element_, location_ + ": " + *rule);
    kb_.add(std::move(a));
  }

  std::string entity_name(const pt::ptree& node) const {
    if (auto iri = attribute(node, "IRI")) return local_name(*iri);
    if (auto abbr = attribute(node, "abbreviatedIRI")) return local_name_abbreviated(*abbr);
    throw InvalidStatement("entity without IRI (" + location_ + ")");
  }

  std::vector<std::pair<std::string, const pt::ptree*>> args(const pt::ptree& node, std::size_t min) const {
    auto out = elements(node);
    std::erase_if(out, [](const auto& e) { return e.first == "Annotation"; });
    if (out.size() < min) throw InvalidStatement(element_ + " needs " + std::to_string(min) + " arguments (" + location_ + ")");
    return out;
  }

  void axiom(const std::string& name, const pt::ptree& node) {
    if (name == "Prefix" || name == "Import" || name == "Annotation" || name.starts_with("Annotation") ||
        name == "SubAnnotationPropertyOf")
      return;
    if (name == "Declaration") return declaration(node);

    if (name == "SubClassOf") {
      auto a = args(node, 2);
      return add(inclusion(class_expr(a[0]), class_expr(a[1])));
    }
    if (name == "EquivalentClasses") {
      auto a = args(node, 2);
      Term first = class_expr(a[0]);
      for (std::size_t i = 1; i < a.size(); ++i) add(equivalence(first, class_expr(a[i])));
      return;
    }
    if (name == "DisjointClasses") {
      auto a = args(node, 2);
      std::vector<Term> cs;
      for (const auto& e : a) cs.push_back(class_expr(e));
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) add(inclusion(conjunction({cs[i], cs[j]}), bottom()));
      return;
    }
    if (name == "SubObjectPropertyOf") {
      auto a = args(node, 2);
      if (a[0].first == "ObjectPropertyChain") {
        std::vector<Term> chain;
        for (const auto& e : args(*a[0].second, 1)) chain.push_back(object_property(e));
        return add(role_chain(std::move(chain), object_property(a[1])));
      }
      return add(role_inclusion(object_property(a[0]), object_property(a[1])));
    }
    if (name == "EquivalentObjectProperties" || name == "EquivalentDataProperties") {
      auto a = args(node, 2);
      Term first = any_property(a[0]);
      for (std::size_t i = 1; i < a.size(); ++i) add(role_equivalence(first, any_property(a[i])));
      return;
    }
    if (name == "DisjointObjectProperties" || name == "DisjointDataProperties") {
      auto a = args(node, 2);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) add(disjoint_roles(any_property(a[i]), any_property(a[j])));
      return;
    }
    if (name == "InverseObjectProperties") {
      auto a = args(node, 2);
      return add(role_equivalence(object_property(a[0]), inverse(object_property(a[1]))));
    }
    if (name == "ObjectPropertyDomain") {
      auto a = args(node, 2);
      return add(inclusion(exists(object_property(a[0]), top()), class_expr(a[1])));
    }
    if (name == "ObjectPropertyRange") {
      auto a = args(node, 2);
      return add(inclusion(top(), forall(object_property(a[0]), class_expr(a[1]))));
    }
    if (name == "DataPropertyRange") {
      auto a = args(node, 2);
      return add(inclusion(top(), forall(data_property(a[0]), data_range(a[1]))));
    }
    if (name == "SubDataPropertyOf") {
      auto a = args(node, 2);
      return add(role_inclusion(data_property(a[0]), data_property(a[1])));
    }
    if (name == "FunctionalObjectProperty") return add(functional(object_property(args(node, 1)[0])));
    if (name == "FunctionalDataProperty") return add(functional(data_property(args(node, 1)[0])));
    if (name == "InverseFunctionalObjectProperty")
      return add(functional(inverse(object_property(args(node, 1)[0]))));
    if (name == "ReflexiveObjectProperty") return add(reflexive(object_property(args(node, 1)[0])));
    if (name == "IrreflexiveObjectProperty") return add(irreflexive(object_property(args(node, 1)[0])));
    if (name == "SymmetricObjectProperty") return add(symmetric(object_property(args(node, 1)[0])));
    if (name == "AsymmetricObjectProperty") return add(asymmetric(object_property(args(node, 1)[0])));
    if (name == "TransitiveObjectProperty") return add(transitive(object_property(args(node, 1)[0])));
    if (name == "DatatypeDefinition") {
      auto a = args(node, 2);
      return add(equivalence(data_range(a[0]), data_range(a[1])));
    }
    if (name == "SameIndividual") {
      auto a = args(node, 2);
      std::string first = individual(a[0]);
      for (std::size_t i = 1; i < a.size(); ++i) add(same_individual(first, individual(a[i])));
      return;
    }
    if (name == "DifferentIndividuals") {
      auto a = args(node, 2);
      std::vector<std::string> inds;
      for (const auto& e : a) inds.push_back(individual(e));
      for (std::size_t i = 0; i < inds.size(); ++i)
        for (std::size_t j = i + 1; j < inds.size(); ++j) add(different_individual(inds[i], inds[j]));
      return;
    }
    if (name == "ClassAssertion") {
      auto a = args(node, 2);
      return add(concept_assertion(individual(a[1]), class_expr(a[0])));
    }
    if (name == "ObjectPropertyAssertion" || name == "NegativeObjectPropertyAssertion") {
      auto a = args(node, 3);
      Term r = object_property(a[0]);
      if (name.starts_with("Negative")) r = negation(std::move(r));
      return add(role_assertion(individual(a[1]), individual(a[2]), std::move(r)));
    }
    if (name == "DataPropertyAssertion" || name == "NegativeDataPropertyAssertion") {
      auto a = args(node, 3);
      Term p = data_property(a[0]);
      if (name.starts_with("Negative")) p = negation(std::move(p));
      return add(data_role_assertion(individual(a[1]), literal(a[2]), std::move(p)));
    }
    unsupported(name);
  }

  void declaration(const pt::ptree& node) {
    auto a = args(node, 1);
    const auto& [kind, entity] = a[0];
    std::string n = entity_name(*entity);
    auto push = [&](std::vector<std::string>& names) {
      if (std::ranges::find(names, n) == names.end()) names.push_back(n);
    };
    if (kind == "Class") {
      if (n != "owl:Thing" && n != "owl:Nothing") push(kb_.signature.concepts);
    } else if (kind == "ObjectProperty") {
      if (!n.starts_with("owl:")) push(kb_.signature.abstract_roles);
    } else if (kind == "DataProperty") {
      push(kb_.signature.concrete_roles);
    } else if (kind == "NamedIndividual") {
      push(kb_.signature.individuals);
    } else if (kind == "Datatype") {
      kb_.dmap.add_datatype(n);
    } else if (kind != "AnnotationProperty") {
      unsupported("Declaration(" + kind + ")");
    }
  }

  using Element = std::pair<std::string, const pt::ptree*>;

  Term class_expr(const Element& e) {
    const auto& [kind, node] = e;
    if (kind == "Class") {
      std::string n = entity_name(*node);
      if (n == "owl:Thing") return top();
      if (n == "owl:Nothing") return bottom();
      return concept_name(std::move(n));
    }
    if (kind == "ObjectIntersectionOf" || kind == "ObjectUnionOf") {
      std::vector<Term> ops;
      for (const auto& x : args(*node, 2)) ops.push_back(class_expr(x));
      return kind == "ObjectIntersectionOf" ? conjunction(std::move(ops)) : disjunction(std::move(ops));
    }
    if (kind == "ObjectComplementOf") return negation(class_expr(args(*node, 1)[0]));
    if (kind == "ObjectOneOf") {
      std::vector<Term> ops;
      for (const auto& x : args(*node, 1)) ops.push_back(nominal(individual(x)));
      return ops.size() == 1 ? ops[0] : disjunction(std::move(ops));
    }
    if (kind == "ObjectHasSelf") return has_self(object_property(args(*node, 1)[0]));
    if (kind == "ObjectHasValue") {
      auto a = args(*node, 2);
      return has_value(object_property(a[0]), individual(a[1]));
    }
    if (kind == "DataHasValue") {
      auto a = args(*node, 2);
      return has_data_value(data_property(a[0]), literal(a[1]));
    }
    if (kind == "ObjectSomeValuesFrom" || kind == "ObjectAllValuesFrom") {
      auto a = args(*node, 2);
      Term r = object_property(a[0]);
      Term c = class_expr(a[1]);
      return kind == "ObjectSomeValuesFrom" ? exists(std::move(r), std::move(c)) : forall(std::move(r), std::move(c));
    }
    if (kind == "DataSomeValuesFrom" || kind == "DataAllValuesFrom") {
      auto a = args(*node, 2);
      if (a.size() != 2) unsupported(kind + " over several data properties");
      Term p = data_property(a[0]);
      Term t = data_range(a[1]);
      return kind == "DataSomeValuesFrom" ? exists(std::move(p), std::move(t)) : forall(std::move(p), std::move(t));
    }
    if (kind == "ObjectMinCardinality" || kind == "ObjectMaxCardinality" || kind == "DataMinCardinality" ||
        kind == "DataMaxCardinality") {
      bool object = kind.starts_with("Object");
      auto a = args(*node, 1);
      int n = cardinality(*node);
      Term r = object ? object_property(a[0]) : data_property(a[0]);
      Term filler = a.size() > 1 ? (object ? class_expr(a[1]) : data_range(a[1])) : (object ? top() : unsupported_filler(kind));
      return kind.ends_with("MinCardinality") ? at_least(n, std::move(r), std::move(filler))
                                              : at_most(n, std::move(r), std::move(filler));
    }
    unsupported(kind);
  }

  [[noreturn]] Term unsupported_filler(const std::string& kind) { unsupported(kind + " without data range"); }

  int cardinality(const pt::ptree& node) {
    auto c = attribute(node, "cardinality");
    if (!c) throw InvalidStatement("cardinality restriction without bound (" + location_ + ")");
    try {
      std::size_t used = 0;
      int n = std::stoi(*c, &used);
      if (used != c->size()) throw std::invalid_argument(*c);
      return n;
    } catch (const std::exception&) {
      throw InvalidStatement("bad cardinality '" + *c + "' (" + location_ + ")");
    }
  }

  Term object_property(const Element& e) {
    const auto& [kind, node] = e;
    if (kind == "ObjectProperty") {
      std::string n = entity_name(*node);
      if (n == "owl:topObjectProperty") return universal_role();
      if (n == "owl:bottomObjectProperty") return negation(universal_role());
      return role(std::move(n));
    }
    if (kind == "ObjectInverseOf") {
      auto a = args(*node, 1);
      if (a[0].first != "ObjectProperty") unsupported("ObjectInverseOf(" + a[0].first + ")");
      return inverse(object_property(a[0]));
    }
    if (kind == "DataProperty") throw NotARole("data property where an object property is expected (" + location_ + ")");
    unsupported(kind);
  }

  Term data_property(const Element& e) {
    const auto& [kind, node] = e;
    if (kind != "DataProperty") throw NotARole("expected a data property (" + location_ + ")");
    std::string n = entity_name(*node);
    if (n.starts_with("owl:")) unsupported(n);
    return data_role(std::move(n));
  }

  Term any_property(const Element& e) {
    return e.first == "DataProperty" ? data_property(e) : object_property(e);
  }

  Term data_range(const Element& e) {
    const auto& [kind, node] = e;
    if (kind == "Datatype") {
      std::string n = entity_name(*node);
      if (n == "rdfs:Literal") unsupported("rdfs:Literal");
      return datatype(std::move(n));
    }
    if (kind == "DataIntersectionOf" || kind == "DataUnionOf") {
      std::vector<Term> ops;
      for (const auto& x : args(*node, 2)) ops.push_back(data_range(x));
      return kind == "DataIntersectionOf" ? conjunction(std::move(ops)) : disjunction(std::move(ops));
    }
    if (kind == "DataComplementOf") return negation(data_range(args(*node, 1)[0]));
    if (kind == "DataOneOf") {
      std::vector<Constant> cs;
      for (const auto& x : args(*node, 1)) cs.push_back(literal(x));
      return one_of(std::move(cs));
    }
    unsupported(kind);
  }

  std::string individual(const Element& e) {
    if (e.first != "NamedIndividual") unsupported(e.first);
    return entity_name(*e.second);
  }

  Constant literal(const Element& e) {
    const auto& [kind, node] = e;
    if (kind != "Literal") throw InvalidStatement("expected a Literal (" + location_ + ")");
    std::string type = "xsd:string";
    if (auto iri = attribute(*node, "datatypeIRI")) type = local_name(*iri);
    return Constant{node->data(), type};
  }

  void check_declared() const {
    KnowledgeBase used = kb_;
    used.declare_used_names();
    auto check = [](const std::vector<std::string>& declared, const std::vector<std::string>& all) {
      for (const auto& n : all)
        if (std::ranges::find(declared, n) == declared.end()) throw UnknownName(n);
    };
    check(kb_.signature.individuals, used.signature.individuals);
    check(kb_.signature.concepts, used.signature.concepts);
    check(kb_.signature.abstract_roles, used.signature.abstract_roles);
    check(kb_.signature.concrete_roles, used.signature.concrete_roles);
    for (const auto& [d, _] : used.dmap.constants)
      if (!d.starts_with("xsd:") && !d.starts_with("rdf:") && !kb_.dmap.constants.contains(d)) throw UnknownName(d);
  }

  const ReadOptions& options_;
  KnowledgeBase kb_;
  std::string location_;
  std::string element_;
};

// Writer

class Writer {
 public:
  std::string write(const KnowledgeBase& input) {
    KnowledgeBase kb = input;
    kb.declare_used_names();

    pt::ptree ontology;
    ontology.put("<xmlattr>.xmlns", std::string(kOwlNamespace));
    ontology.put("<xmlattr>.ontologyIRI", "urn:dl4x:ontology");
    for (const auto& ns : kStandardNamespaces) {
      pt::ptree& p = ontology.add_child("Prefix", {});
      p.put("<xmlattr>.name", std::string(ns.prefix));
      p.put("<xmlattr>.IRI", std::string(ns.iri));
    }
    auto declare = [&](const char* kind, const std::string& n) {
      pt::ptree& d = ontology.add_child("Declaration", {});
      d.add_child(kind, entity(n));
    };
    for (const auto& n : kb.signature.concepts) declare("Class", n);
    for (const auto& n : kb.signature.abstract_roles) declare("ObjectProperty", n);
    for (const auto& n : kb.signature.concrete_roles) declare("DataProperty", n);
    for (const auto& n : kb.signature.individuals) declare("NamedIndividual", n);
    for (const auto& [d, _] : kb.dmap.constants) declare("Datatype", d);

    for (const Axiom* a : kb.statements()) {
      auto [name, node] = axiom(*a);
      ontology.add_child(name, node);
    }

    pt::ptree doc;
    doc.add_child("Ontology", ontology);
    std::ostringstream os;
    pt::write_xml(os, doc, pt::xml_writer_make_settings<std::string>(' ', 2));
    return os.str();
  }

 private:
  using Named = std::pair<std::string, pt::ptree>;

  [[noreturn]] static void unsupported(const std::string& what) { throw UnsupportedAxiom(what, "writer"); }

  static pt::ptree entity(const std::string& n) {
    pt::ptree e;
    bool standard = std::ranges::any_of(kStandardNamespaces, [&](const Namespace& ns) {
      return n.starts_with(std::string(ns.prefix) + ":");
    });
    if (standard)
      e.put("<xmlattr>.abbreviatedIRI", n);
    else
      e.put("<xmlattr>.IRI", "#" + n);
    return e;
  }

  static pt::ptree with(std::initializer_list<Named> children) {
    pt::ptree t;
    for (const auto& [k, v] : children) t.add_child(k, v);
    return t;
  }

  static pt::ptree with(std::vector<Named> children) {
    pt::ptree t;
    for (auto& [k, v] : children) t.add_child(k, v);
    return t;
  }

  static Named literal(const Constant& c) {
    pt::ptree t;
    t.put_value(c.value);
    std::string iri = "#" + c.datatype;
    for (const auto& ns : kStandardNamespaces)
      if (c.datatype.starts_with(std::string(ns.prefix) + ":"))
        iri = std::string(ns.iri) + c.datatype.substr(ns.prefix.size() + 1);
    t.put("<xmlattr>.datatypeIRI", iri);
    return {"Literal", t};
  }

  static Named individual(const std::string& a) { return {"NamedIndividual", entity(a)}; }

  Named object_property(const Term& r) {
    switch (r.kind) {
      case TermKind::RoleName: return {"ObjectProperty", entity(r.name)};
      case TermKind::UniversalRole: return {"ObjectProperty", entity("owl:topObjectProperty")};
      case TermKind::Inverse:
        if (r.operands[0].kind == TermKind::RoleName) return {"ObjectInverseOf", with({object_property(r.operands[0])})};
        break;
      case TermKind::Not:
        if (r.operands[0].kind == TermKind::UniversalRole) return {"ObjectProperty", entity("owl:bottomObjectProperty")};
        break;
      default: break;
    }
    unsupported("role term " + to_string(r));
  }

  Named property(const Term& r) {
    if (r.kind == TermKind::DataRoleName) return {"DataProperty", entity(r.name)};
    return object_property(r);
  }

  Named class_expr(const Term& c) {
    switch (c.kind) {
      case TermKind::ConceptName: return {"Class", entity(c.name)};
      case TermKind::Top: return {"Class", entity("owl:Thing")};
      case TermKind::Bottom: return {"Class", entity("owl:Nothing")};
      case TermKind::Nominal: return {"ObjectOneOf", with({individual(c.name)})};
      case TermKind::HasSelf: return {"ObjectHasSelf", with({object_property(c.operands[0])})};
      case TermKind::HasValue: return {"ObjectHasValue", with({object_property(c.operands[0]), individual(c.name)})};
      case TermKind::HasDataValue:
        return {"DataHasValue", with({property(c.operands[0]), literal(c.constants.at(0))})};
      case TermKind::Exists:
      case TermKind::ForAll: {
        bool data = c.operands[0].kind == TermKind::DataRoleName;
        std::string name = std::string(data ? "Data" : "Object") +
                           (c.kind == TermKind::Exists ? "SomeValuesFrom" : "AllValuesFrom");
        return {name, with({property(c.operands[0]), filler(c.operands[1], data)})};
      }
      case TermKind::AtLeast:
      case TermKind::AtMost: {
        bool data = c.operands[0].kind == TermKind::DataRoleName;
        std::string name =
            std::string(data ? "Data" : "Object") + (c.kind == TermKind::AtLeast ? "MinCardinality" : "MaxCardinality");
        pt::ptree t = with({property(c.operands[0]), filler(c.operands[1], data)});
        t.put("<xmlattr>.cardinality", c.cardinality);
        return {name, t};
      }
      case TermKind::Not: return {"ObjectComplementOf", with({class_expr(c.operands[0])})};
      case TermKind::And:
      case TermKind::Or: {
        std::vector<Named> ops;
        for (const auto& op : c.operands) ops.push_back(class_expr(op));
        return {c.kind == TermKind::And ? "ObjectIntersectionOf" : "ObjectUnionOf", with(std::move(ops))};
      }
      default: unsupported("concept term " + to_string(c));
    }
  }

  Named filler(const Term& t, bool data) { return data ? data_range(t) : class_expr(t); }

  Named data_range(const Term& t) {
    switch (t.kind) {
      case TermKind::Datatype: return {"Datatype", entity(t.name)};
      case TermKind::OneOf: {
        std::vector<Named> ops;
        for (const auto& c : t.constants) ops.push_back(literal(c));
        return {"DataOneOf", with(std::move(ops))};
      }
      case TermKind::Not: return {"DataComplementOf", with({data_range(t.operands[0])})};
      case TermKind::And:
      case TermKind::Or: {
        std::vector<Named> ops;
        for (const auto& op : t.operands) ops.push_back(data_range(op));
        return {t.kind == TermKind::And ? "DataIntersectionOf" : "DataUnionOf", with(std::move(ops))};
      }
      default: unsupported("data type term " + to_string(t));
    }
  }

  // Inverse of the reader's mapping, one OWL axiom per statement.
  Named axiom(const Axiom& a) {
    const auto& t = a.terms;
    bool data = !t.empty() && category_of(t[0]) == Category::ConcreteRole;
    auto ind = [&](std::size_t i) { return individual(a.individuals.at(i)); };
    switch (a.kind) {
      case AxiomKind::RoleEquivalence:
        if (t[1].kind == TermKind::Product) unsupported("role product axiom");
        return {data ? "EquivalentDataProperties" : "EquivalentObjectProperties", with({property(t[0]), property(t[1])})};
      case AxiomKind::RoleInclusion:
        return {data ? "SubDataPropertyOf" : "SubObjectPropertyOf", with({property(t[0]), property(t[1])})};
      case AxiomKind::RoleChainInclusion: {
        std::vector<Named> chain;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) chain.push_back(object_property(t[i]));
        return {"SubObjectPropertyOf", with({{"ObjectPropertyChain", with(std::move(chain))}, object_property(t.back())})};
      }
      case AxiomKind::Symmetric: return {"SymmetricObjectProperty", with({object_property(t[0])})};
      case AxiomKind::Asymmetric: return {"AsymmetricObjectProperty", with({object_property(t[0])})};
      case AxiomKind::Reflexive: return {"ReflexiveObjectProperty", with({object_property(t[0])})};
      case AxiomKind::Irreflexive: return {"IrreflexiveObjectProperty", with({object_property(t[0])})};
      case AxiomKind::Transitive: return {"TransitiveObjectProperty", with({object_property(t[0])})};
      case AxiomKind::DisjointRoles:
        return {data ? "DisjointDataProperties" : "DisjointObjectProperties", with({property(t[0]), property(t[1])})};
      case AxiomKind::Functional:
        if (data) return {"FunctionalDataProperty", with({property(t[0])})};
        if (t[0].kind == TermKind::Inverse && t[0].operands[0].kind == TermKind::RoleName)
          return {"InverseFunctionalObjectProperty", with({object_property(t[0].operands[0])})};
        return {"FunctionalObjectProperty", with({object_property(t[0])})};
      case AxiomKind::Equivalence:
        if (category_of(t[0]) == Category::DataRange) {
          if (t[0].kind != TermKind::Datatype) unsupported("data type equivalence with a compound left side");
          return {"DatatypeDefinition", with({data_range(t[0]), data_range(t[1])})};
        }
        return {"EquivalentClasses", with({class_expr(t[0]), class_expr(t[1])})};
      case AxiomKind::Inclusion:
        if (category_of(t[0]) == Category::DataRange) unsupported("data type inclusion");
        return {"SubClassOf", with({class_expr(t[0]), class_expr(t[1])})};
      case AxiomKind::ConceptAssertion: return {"ClassAssertion", with({class_expr(t[0]), ind(0)})};
      case AxiomKind::RoleAssertion:
        if (t[0].kind == TermKind::Not && t[0].operands[0].kind != TermKind::UniversalRole)
          return {"NegativeObjectPropertyAssertion", with({object_property(t[0].operands[0]), ind(0), ind(1)})};
        return {"ObjectPropertyAssertion", with({object_property(t[0]), ind(0), ind(1)})};
      case AxiomKind::SameIndividual: return {"SameIndividual", with({ind(0), ind(1)})};
      case AxiomKind::DifferentIndividual: return {"DifferentIndividuals", with({ind(0), ind(1)})};
      case AxiomKind::DataAssertion: unsupported("data type assertion");
      case AxiomKind::DataRoleAssertion:
        if (t[0].kind == TermKind::Not)
          return {"NegativeDataPropertyAssertion", with({property(t[0].operands[0]), ind(0), literal(*a.constant)})};
        return {"DataPropertyAssertion", with({property(t[0]), ind(0), literal(*a.constant)})};
    }
    unsupported(to_string(a.kind));
  }
};

}  // namespace

std::string local_name(std::string_view iri) {
  for (const auto& ns : kStandardNamespaces)
    if (iri.starts_with(ns.iri)) return std::string(ns.prefix) + ":" + escape_name(iri.substr(ns.iri.size()));
  auto hash = iri.rfind('#');
  if (hash != std::string_view::npos) return escape_name(iri.substr(hash + 1));
  auto slash = iri.rfind('/');
  if (slash != std::string_view::npos && slash + 1 < iri.size()) return escape_name(iri.substr(slash + 1));
  return escape_name(iri);
}

std::string local_name_abbreviated(std::string_view abbreviated_iri) {
  auto colon = abbreviated_iri.find(':');
  if (colon == std::string_view::npos) return escape_name(abbreviated_iri);
  auto prefix = abbreviated_iri.substr(0, colon);
  bool standard = std::ranges::any_of(kStandardNamespaces, [&](const Namespace& ns) { return ns.prefix == prefix; });
  if (standard) return std::string(prefix) + ":" + escape_name(abbreviated_iri.substr(colon + 1));
  return escape_name(abbreviated_iri.substr(colon + 1));
}

KnowledgeBase read_owl_xml(std::string_view document, const ReadOptions& options) {
  pt::ptree doc;
  std::istringstream in{std::string(document)};
  try {
    pt::read_xml(in, doc, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw XmlError(e.line(), e.message());
  }
  return Reader(options).read(doc);
}

KnowledgeBase read_owl_xml_file(const std::string& path, const ReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_owl_xml(buf.str(), options);
}

std::string write_owl_xml(const KnowledgeBase& kb) { return Writer().write(kb); }

}  // namespace dl4x
