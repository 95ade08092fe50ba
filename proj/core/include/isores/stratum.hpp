#ifndef ISORES_STRATUM_HPP
#define ISORES_STRATUM_HPP

#include <string>
#include <vector>

#include "isores/bigint.hpp"
#include "isores/error.hpp"

namespace isores {

// Signature of a genus-zero stratum H(a_1,...,a_n,-b_1,...,-b_p).
// Zero and pole orders are stored as positive integers; the degree
// condition sum(a) - sum(b) = -2 is enforced by validate().
struct Stratum {
  std::vector<int> zero_orders;
  std::vector<int> pole_orders;

  int num_zeros() const { return static_cast<int>(zero_orders.size()); }
  int num_poles() const { return static_cast<int>(pole_orders.size()); }
  long long zero_order_sum() const;
  long long pole_order_sum() const;
};

Stratum validate(std::vector<int> zero_orders, std::vector<int> pole_orders);

// "2,3,-1,-2,-4": positive entries are zero orders in order of appearance,
// negative entries are pole orders in label order.
Stratum parse_mu(const std::string& text);
std::string format_mu(const Stratum& s);

// Integer linear form sum_j w_j * lambda_j over the residues of the p poles.
// Two forms are the same linear form on the residue space (where the lambda_j
// sum to zero) when they differ by a multiple of the all-ones vector.
struct ResidueForm {
  std::vector<long long> coeffs;

  int p() const { return static_cast<int>(coeffs.size()); }
  bool is_zero_canonical() const;
};

ResidueForm zero_form(int p);

// Unique translate by a multiple of (1,...,1) whose minimum coefficient is 0.
ResidueForm canonicalize(const ResidueForm& f);

bool same_form(const ResidueForm& a, const ResidueForm& b);

// "l2+l3", "4*l1+3*l3", "0"
std::string format_form(const ResidueForm& f);

// true when every coefficient is 0 or 1
bool is_partial_sum_form(const ResidueForm& f);

} // namespace isores

#endif
