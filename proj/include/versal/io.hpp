#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "versal/deformation.hpp"
#include "versal/error.hpp"
#include "versal/jordan.hpp"
#include "versal/matrix.hpp"
#include "versal/polyrec.hpp"

namespace versal::io {

/// Malformed document. The message names the line/column for syntax
/// errors and the field path (e.g. "blocks[1].sizes") for schema errors.
class FormatError : public Error {
public:
    using Error::Error;
};

/// One self-describing JSON document. The "kind" member selects the
/// alternative: "matrix", "structure", "polynomial" or "pattern".
/// Complex numbers are [re, im] pairs; pattern indices are 1-based.
using Document = std::variant<ComplexMatrix, SegreStructure, MonicPolynomial, DeformationPattern>;

std::string dump(const Document& doc);
Document parse(std::string_view text);

void write_file(const std::filesystem::path& path, const Document& doc);
Document read_file(const std::filesystem::path& path);

/// read_file and require a specific alternative.
template <typename T>
T read_as(const std::filesystem::path& path) {
    Document doc = read_file(path);
    if (auto* value = std::get_if<T>(&doc)) return std::move(*value);
    throw FormatError(path.string() + ": document has the wrong kind");
}

std::string to_string(DeformationShape shape);

}  // namespace versal::io
