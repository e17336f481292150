#pragma once

// Text, JSON and LaTeX renderings of matrices, certificates and layouts.

#include <string>

#include <json.hpp>

#include "nilcanon/canon.hpp"

namespace nilcanon {

using Json = nlohmann::ordered_json;

Json matrix_entries_json(const Mat& m);
Json certificate_json(const Certificate& cert);
/// {"n", "field", "type", "partition", "variant", "entries", "certificate", ...}
Json form_json(const CanonicalForm& form);
Json layout_json(const BlockLayout& layout);

struct ParsedMatrix {
  Mat matrix;
  Field field;
  Json document;
};
/// Reads the "field" and "entries" keys of a form document. Throws ParseError.
ParsedMatrix parse_matrix_json(const Json& document);
/// The certificate stored in a form document. Throws ParseError.
Certificate parse_certificate_json(const Json& j);

std::string matrix_text(const Mat& m);
std::string matrix_latex(const Mat& m);
std::string certificate_text(const Certificate& cert);
std::string layout_text(const BlockLayout& layout);

}  // namespace nilcanon
