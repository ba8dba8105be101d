#include "gammacf/poly.hpp"

#include <sstream>

#include "json.hpp"

namespace gammacf {

namespace {

std::string power_of(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

// Shared term writer; coeff_text renders |c| and reports whether it is one
// and whether it needs parentheses.
template <class C, class Render>
std::string format_terms(const Poly<C>& p, const std::string& var, Render render) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const C& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    auto [text, negative, unit] = render(c);
    if (negative)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    const std::string mono = power_of(var, k);
    if (mono.empty()) {
      os << text;
    } else if (unit) {
      os << mono;
    } else {
      os << text << "*" << mono;
    }
  }
  return os.str();
}

struct Rendered {
  std::string text;
  bool negative;
  bool unit;
};

}  // namespace

std::string format(const IntPoly& p, const std::string& var) {
  return format_terms(p, var, [](const Integer& c) {
    Integer a = abs(c);
    return Rendered{a.get_str(), sgn(c) < 0, a == 1};
  });
}

std::string format(const RatPoly& p, const std::string& var) {
  return format_terms(p, var, [](const Rational& c) {
    Rational a = abs(c);
    return Rendered{a.get_str(), sgn(c) < 0, a == 1};
  });
}

std::string format(const BiPoly& p, const std::string& outer, const std::string& inner) {
  return format_terms(p, outer, [&](const IntPoly& c) {
    if (c.size() == 1 || (c.valuation() == c.degree())) {
      // Single term: print without parentheses.
      const Integer& lead = c.coeffs().back();
      const bool neg = sgn(lead) < 0;
      IntPoly mag = neg ? IntPoly(-c) : c;
      return Rendered{format(mag, inner), neg, mag == IntPoly(1)};
    }
    return Rendered{"(" + format(c, inner) + ")", false, false};
  });
}

std::string json_int_array(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  s += "]";
  return s;
}

std::string to_json(const IntPoly& p, const std::string& var) {
  return "{\"var\":\"" + var + "\",\"coeffs\":" + json_int_array(p.coeffs()) + "}";
}

std::string to_json(const BiPoly& p, const std::string& outer, const std::string& inner) {
  std::string s = "{\"vars\":[\"" + inner + "\",\"" + outer + "\"],\"coeffs\":[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += json_int_array(p.coeffs()[i].coeffs());
  }
  s += "]}";
  return s;
}

namespace {

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("polynomial JSON: coefficient must be an integer or a decimal string");
}

// Integer literals too long for a 64-bit value are wrapped in quotes so the
// JSON parser keeps their exact digits.
std::string quote_long_integers(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (in_string) {
      out += c;
      if (c == '\\' && i + 1 < text.size()) out += text[++i];
      else if (c == '"') in_string = false;
      ++i;
      continue;
    }
    if (c == '"') {
      in_string = true;
      out += c;
      ++i;
      continue;
    }
    if (c == '-' || (c >= '0' && c <= '9')) {
      std::size_t j = i + (c == '-' ? 1 : 0);
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      const bool integral = j == text.size() || (text[j] != '.' && text[j] != 'e' && text[j] != 'E');
      if (integral && j - i > 18) {
        out += '"';
        out.append(text, i, j - i);
        out += '"';
      } else {
        out.append(text, i, j - i);
      }
      i = j == i ? i + 1 : j;
      continue;
    }
    out += c;
    ++i;
  }
  return out;
}

}  // namespace

IntPoly parse_int_poly_json(const std::string& text) {
  const auto j = nlohmann::json::parse(quote_long_integers(text));
  const nlohmann::json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw std::invalid_argument("polynomial JSON: missing \"coeffs\"");
    arr = &j.at("coeffs");
  }
  if (arr->is_number() || arr->is_string()) return IntPoly(integer_from_json(*arr));
  if (!arr->is_array()) throw std::invalid_argument("polynomial JSON: \"coeffs\" must be an array");
  std::vector<Integer> v;
  for (const auto& c : *arr) v.push_back(integer_from_json(c));
  return IntPoly(std::move(v));
}

}  // namespace gammacf
