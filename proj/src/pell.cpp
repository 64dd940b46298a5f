#include "nagell/pell.hpp"

#include <stdexcept>

namespace nagell {

namespace {

void require_pell_parameter(const Int& d) {
  if (d < 2) {
    throw std::invalid_argument("pell: d = " + to_string(d) + " must be at least 2");
  }
  if (as_square(d)) {
    throw std::invalid_argument("pell: d = " + to_string(d) + " is a perfect square");
  }
}

}  // namespace

SurdState SurdState::start(const Int& d) {
  Int a0 = isqrt(d);
  return SurdState{d, 0, 1, a0};
}

SurdState SurdState::next() const {
  // a0 is recovered from d each step; cheap next to the bignum divisions.
  const Int a0 = isqrt(d);
  Int m_next = a * q - m;
  Int q_next = (d - m_next * m_next) / q;
  Int a_next = (a0 + m_next) / q_next;
  return SurdState{d, std::move(m_next), std::move(q_next), std::move(a_next)};
}

ContinuedFraction cf_expand(const Int& d) {
  require_pell_parameter(d);
  SurdState state = SurdState::start(d);
  ContinuedFraction cf{state.a, {}};
  const Int end_marker = 2 * cf.a0;
  do {
    state = state.next();
    cf.period.push_back(state.a);
  } while (state.a != end_marker);
  return cf;
}

PellFundamental pell_fundamental_cf(const Int& d) {
  const ContinuedFraction cf = cf_expand(d);
  const std::size_t period = cf.period.size();

  // Convergents p_i / q_i up to index L - 1.
  Int p_prev = 1, p = cf.a0;
  Int q_prev = 0, q = 1;
  for (std::size_t i = 0; i + 1 < period; ++i) {
    const Int& a = cf.period[i];
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }

  if (period % 2 == 0) return PellFundamental{d, p, q};
  // (p + q sqrt d)^2 turns the norm -1 solution into norm +1.
  return PellFundamental{d, p * p + d * q * q, 2 * p * q};
}

PellFundamental pell_fundamental(const Int& d) {
  require_pell_parameter(d);
  if (auto m = as_square(d + 1)) return PellFundamental{d, *m, 1};
  return pell_fundamental_cf(d);
}

std::vector<std::pair<Int, Int>> pell_solutions(const PellFundamental& fund,
                                                std::size_t count) {
  if (count == 0) throw std::invalid_argument("pell_solutions: count must be positive");
  std::vector<std::pair<Int, Int>> out;
  out.reserve(count);
  out.emplace_back(fund.x1, fund.y1);
  while (out.size() < count) {
    const auto& [x, y] = out.back();
    Int x_next = fund.x1 * x + fund.d * fund.y1 * y;
    Int y_next = fund.x1 * y + fund.y1 * x;
    out.emplace_back(std::move(x_next), std::move(y_next));
  }
  return out;
}

}  // namespace nagell
