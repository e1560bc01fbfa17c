#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "cmon/actions.hpp"
#include "cmon/algebra.hpp"

namespace cmon::cli {

using Model = std::variant<CAlgebra, Ada, BoolAlg, CSet, CMonoid, BMonoid>;

/// "calgebra", "ada", "boolalg", "cset", "cmonoid", "bmonoid"
const char* model_kind(const Model& m);

/// Throws ParseError carrying a 1-based line number, or StructuralError when
/// the tables are well formed but inconsistent.
Model read_model(std::istream& in);
Model read_model_file(const std::string& path);

void write_model(std::ostream& out, const Model& m);
void write_model_file(const std::string& path, const Model& m);

}  // namespace cmon::cli
