#pragma once

// OWL/XML ingestion into knowledge bases and the inverse serializer.

#include <string>
#include <string_view>

#include "dl4x/kb.hpp"

namespace dl4x {

struct ReadOptions {
  // When false, any name used without a Declaration raises UnknownName.
  bool auto_declare = true;
};

// Parses an OWL/XML document. Throws XmlError on malformed XML,
// UnsupportedAxiom for constructs outside the logic and UnknownName for
// undeclared names in strict mode.
dl::KnowledgeBase read_owl_xml(std::string_view document, const ReadOptions& options = {});
dl::KnowledgeBase read_owl_xml_file(const std::string& path, const ReadOptions& options = {});

// Serializes `kb` as OWL/XML. Throws UnsupportedAxiom for terms without an
// OWL counterpart (role products, identity roles, role restrictions, role
// Booleans outside negative assertions).
std::string write_owl_xml(const dl::KnowledgeBase& kb);

// Maps an IRI to the local name used by the reasoner: the fragment (or last
// path segment) for user names, `xsd:`/`rdf:`/`rdfs:`/`owl:` prefixed
// names for the standard vocabularies.
std::string local_name(std::string_view iri);
std::string local_name_abbreviated(std::string_view abbreviated_iri);

}  // namespace dl4x
