#include "gammacf/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gammacf {

MPoly::MPoly(const Integer& c) {
  if (!gammacf::is_zero(c)) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::var(std::size_t index) {
  if (index >= kMaxVars) throw std::out_of_range("MPoly::var: index out of range");
  MPoly p;
  Exponents e{};
  e[index] = 1;
  p.terms_.emplace(e, Integer(1));
  return p;
}

Integer MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (gammacf::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator-(MPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e{};
      for (std::size_t i = 0; i < MPoly::kMaxVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      Integer c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Integer MPoly::eval(std::span<const Integer> values) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      if (i >= values.size()) throw std::invalid_argument("MPoly::eval: missing variable value");
      term *= ipow(values[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

std::string MPoly::format(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = e == Exponents{};
    if (sgn(c) < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    Integer mag = abs(c);
    bool need_sep = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      need_sep = true;
    }
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      if (i >= names.size()) throw std::invalid_argument("MPoly::format: missing variable name");
      if (need_sep) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_sep = true;
    }
  }
  return os.str();
}

}  // namespace gammacf
