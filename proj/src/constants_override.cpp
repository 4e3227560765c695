#include "constants_override.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace skv {

namespace {

using nlohmann::json;

long long integer_entry(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    fail(ErrorKind::Shape, where + ": integer required");
  }
  return v.get<long long>();
}

Rational rational_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return Rational(static_cast<long>(v.get<long long>()));
  }
  if (v.is_string()) {
    return parse_rational(v.get<std::string>());  // Parse / NonRational
  }
  if (v.is_number_float()) {
    fail(ErrorKind::NonRational, where + ": floating point is not exact");
  }
  fail(ErrorKind::Shape, where + ": integer or \"num/den\" string required");
}

KElem k_entry(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) {
    fail(ErrorKind::Shape, where + ": K element must be a 3-element array");
  }
  return KElem(rational_entry(v[0], where + "[0]"),
               rational_entry(v[1], where + "[1]"),
               rational_entry(v[2], where + "[2]"));
}

ConstantsOverride::IntTripleMatrix matrix_entry(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) {
    fail(ErrorKind::Shape, where + ": 3x3 matrix required");
  }
  ConstantsOverride::IntTripleMatrix m{};
  for (std::size_t i = 0; i < 3; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != 3) {
      fail(ErrorKind::Shape, where + ": 3x3 matrix required");
    }
    for (std::size_t j = 0; j < 3; ++j) {
      const json& entry = row[j];
      const std::string at =
          where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!entry.is_array() || entry.size() != 3) {
        fail(ErrorKind::Shape, at + ": K entry must be an integer triple");
      }
      for (std::size_t t = 0; t < 3; ++t) {
        m[i][j][t] = integer_entry(entry[t], at + "[" + std::to_string(t) + "]");
      }
    }
  }
  return m;
}

}  // namespace

ConstantsOverride parse_constants_override(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("constants document: ") + e.what());
  }
  if (!doc.is_object()) {
    fail(ErrorKind::Shape, "constants document must be a JSON object");
  }

  ConstantsOverride out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "c") {
      out.c_num = matrix_entry(value, "c");
    } else if (key == "c_denominator") {
      const long long den = integer_entry(value, "c_denominator");
      if (den <= 0) {
        fail(ErrorKind::NonRational, "c_denominator must be positive");
      }
      out.c_den = den;
    } else if (key == "lambda") {
      if (!value.is_array() || value.size() != 3) {
        fail(ErrorKind::Shape, "lambda: L element must be 3 K elements");
      }
      out.lambda = LElem(k_entry(value[0], "lambda[0]"), k_entry(value[1], "lambda[1]"),
                         k_entry(value[2], "lambda[2]"));
    } else if (key == "d") {
      out.d_num = matrix_entry(value, "d");
    } else {
      fail(ErrorKind::Shape, "unknown key '" + key + "'");
    }
  }
  if (out.c_den.has_value() && !out.c_num.has_value()) {
    fail(ErrorKind::Shape, "c_denominator given without c");
  }
  return out;
}

ConstantsOverride load_constants_override(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::Io, "cannot read constants file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_constants_override(buffer.str());
}

namespace {

DElem build_from_matrix(const ConstantsOverride::IntTripleMatrix& m, long long den) {
  // m[i][j]: i = theta power, j = u power.
  std::array<LElem, 3> slices;
  for (int j = 0; j < 3; ++j) {
    std::array<KElem, 3> ks;
    for (int i = 0; i < 3; ++i) {
      const auto& t = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ks[static_cast<std::size_t>(i)] =
          KElem(rat(static_cast<long>(t[0]), static_cast<long>(den)),
                rat(static_cast<long>(t[1]), static_cast<long>(den)),
                rat(static_cast<long>(t[2]), static_cast<long>(den)));
    }
    slices[static_cast<std::size_t>(j)] = LElem(ks[0], ks[1], ks[2]);
  }
  return DElem(slices[0], slices[1], slices[2]);
}

}  // namespace

MaterializedConstants materialize(const ConstantsOverride& o) {
  MaterializedConstants out{builtin_theta_image(), builtin_u_image(), builtin_inner_d()};
  if (o.c_num) {
    out.theta_image = build_from_matrix(*o.c_num, o.c_den.value_or(673));
  }
  if (o.lambda) {
    out.u_image = DElem(LElem::zero(), *o.lambda, LElem::zero());
  }
  if (o.d_num) {
    out.inner_d = build_from_matrix(*o.d_num, 1);
  }
  return out;
}

}  // namespace skv
