#include "isores/stratum.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace isores {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NonPositiveOrder: return "NonPositiveOrder";
    case Errc::WrongZeroCount: return "WrongZeroCount";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::NotInChamber: return "NotInChamber";
    case Errc::ChamberCrossing: return "ChamberCrossing";
    case Errc::NonIntegral: return "NonIntegral";
  }
  return "Unknown";
}

long long Stratum::zero_order_sum() const {
  return std::accumulate(zero_orders.begin(), zero_orders.end(), 0LL);
}

long long Stratum::pole_order_sum() const {
  return std::accumulate(pole_orders.begin(), pole_orders.end(), 0LL);
}

Stratum validate(std::vector<int> zero_orders, std::vector<int> pole_orders) {
  if (zero_orders.empty() || pole_orders.empty())
    throw Error(Errc::ParseError, "signature needs at least one zero and one pole");
  for (int a : zero_orders)
    if (a < 1) throw Error(Errc::NonPositiveOrder, "zero order " + std::to_string(a) + " is not >= 1");
  for (int b : pole_orders)
    if (b < 1) throw Error(Errc::NonPositiveOrder, "pole order " + std::to_string(b) + " is not >= 1");
  long long za = std::accumulate(zero_orders.begin(), zero_orders.end(), 0LL);
  long long pb = std::accumulate(pole_orders.begin(), pole_orders.end(), 0LL);
  if (za - pb != -2)
    throw Error(Errc::DegreeMismatch,
                "sum of orders is " + std::to_string(za - pb) + ", expected -2");
  return Stratum{std::move(zero_orders), std::move(pole_orders)};
}

Stratum parse_mu(const std::string& text) {
  std::vector<int> zeros, poles;
  std::string token;
  std::stringstream ss(text);
  bool any = false;
  while (std::getline(ss, token, ',')) {
    size_t first = token.find_first_not_of(" \t");
    size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw Error(Errc::ParseError, "empty entry in signature '" + text + "'");
    token = token.substr(first, last - first + 1);
    int value = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
      throw Error(Errc::ParseError, "cannot parse '" + token + "' as an order");
    any = true;
    if (value > 0)
      zeros.push_back(value);
    else if (value < 0)
      poles.push_back(-value);
    else
      throw Error(Errc::NonPositiveOrder, "order 0 is not allowed");
  }
  if (!any) throw Error(Errc::ParseError, "empty signature");
  return validate(std::move(zeros), std::move(poles));
}

std::string format_mu(const Stratum& s) {
  std::string out;
  for (size_t i = 0; i < s.zero_orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.zero_orders[i]);
  }
  for (int b : s.pole_orders) {
    out += ",-";
    out += std::to_string(b);
  }
  return out;
}

bool ResidueForm::is_zero_canonical() const {
  const ResidueForm c = canonicalize(*this);
  return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](long long w) { return w == 0; });
}

ResidueForm zero_form(int p) { return ResidueForm{std::vector<long long>(p, 0)}; }

ResidueForm canonicalize(const ResidueForm& f) {
  if (f.coeffs.empty()) return f;
  long long m = *std::min_element(f.coeffs.begin(), f.coeffs.end());
  ResidueForm out = f;
  for (auto& w : out.coeffs) w -= m;
  return out;
}

bool same_form(const ResidueForm& a, const ResidueForm& b) {
  if (a.p() != b.p()) return false;
  return canonicalize(a).coeffs == canonicalize(b).coeffs;
}

std::string format_form(const ResidueForm& f) {
  std::string out;
  for (int j = 0; j < f.p(); ++j) {
    long long w = f.coeffs[j];
    if (w == 0) continue;
    if (w > 0 && !out.empty()) out += '+';
    if (w == -1)
      out += '-';
    else if (w != 1) {
      out += std::to_string(w);
      out += '*';
    }
    out += 'l';
    out += std::to_string(j + 1);
  }
  if (out.empty()) out = "0";
  return out;
}

bool is_partial_sum_form(const ResidueForm& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(),
                     [](long long w) { return w == 0 || w == 1; });
}

} // namespace isores
