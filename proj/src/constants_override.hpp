#pragma once

#include <array>
#include <optional>
#include <string>

#include "algebra_d.hpp"

namespace skv {

// Alternative constants for experiments and negative controls.  The document
// is JSON with exact entries only:
//
//   {
//     "c":             3x3 matrix of K elements as integer triples,
//     "c_denominator": positive integer under every c entry (default 673),
//     "lambda":        L element as 3 K elements, each 3 rationals
//                      (integers or "num/den" strings),
//     "d":             3x3 matrix of K elements as integer triples
//   }
//
// Matrix rows are theta powers, columns are u powers, exactly like the
// compiled-in tables.  Unspecified fields keep their built-in values.
// Floating-point numbers are rejected everywhere.
struct ConstantsOverride {
  using IntTripleMatrix = std::array<std::array<std::array<long long, 3>, 3>, 3>;

  std::optional<IntTripleMatrix> c_num;
  std::optional<long long> c_den;
  std::optional<LElem> lambda;
  std::optional<IntTripleMatrix> d_num;

  bool any() const {
    return c_num.has_value() || c_den.has_value() || lambda.has_value() ||
           d_num.has_value();
  }
};

// Throws Parse on malformed JSON, Shape on wrong structure (sizes, types,
// unknown keys, c_denominator without c), NonRational on a zero denominator
// or floating-point entry.
ConstantsOverride parse_constants_override(const std::string& text);

// Same, reading the document from a file; throws Io when unreadable.
ConstantsOverride load_constants_override(const std::string& path);

struct MaterializedConstants {
  DElem theta_image;
  DElem u_image;
  DElem inner_d;
};

// Combines the override with the built-in defaults.
MaterializedConstants materialize(const ConstantsOverride& o);

}  // namespace skv
