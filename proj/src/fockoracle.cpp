#include "ptau/fockoracle.hpp"

#include <bit>

#include "ptau/errors.hpp"

namespace ptau {

Triple WedgeState::charges() const {
  Triple c;
  for (int a = 0; a < 3; ++a) c[a] = base[a] + std::popcount(mask[a]);
  return c;
}

Rational WedgeState::degree() const {
  // Energy of a component: sum of occupied l > 0 minus sum of empty l < 0,
  // with l = L + 1/2.
  Rational total = 0;
  for (int a = 0; a < 3; ++a) {
    const int b = base[a];
    auto occupied = [&](int L) { return L < b || (L - b < 64 && (mask[a] >> (L - b) & 1u)); };
    const int hi = b + 64;
    const int lo = std::min(b, 0) - 1;
    for (int L = lo; L < hi; ++L) {
      Rational l = Rational(2 * L + 1, 2);
      if (l > 0 && occupied(L)) total += l;
      if (l < 0 && !occupied(L)) total -= l;
    }
  }
  return total;
}

std::optional<Triple> WedgeState::as_vacuum() const {
  Triple k;
  for (int a = 0; a < 3; ++a) {
    std::uint64_t m = mask[a];
    if (m & (m + 1)) return std::nullopt;  // not a contiguous run from bit 0
    k[a] = base[a] + std::popcount(m);
  }
  return k;
}

FockVector FockVector::charged_vacuum(const SymbolsPtr& syms, const Triple& k) {
  FockVector v(syms);
  v.add(WedgeState{k, {0, 0, 0}}, MultiPoly::constant(syms, 1));
  return v;
}

void FockVector::add(const WedgeState& s, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly FockVector::vacuum_coefficient(const Triple& k) const {
  MultiPoly acc(syms_);
  for (const auto& [s, c] : terms_) {
    auto v = s.as_vacuum();
    if (v && *v == k) acc += c;
  }
  return acc;
}

namespace {

// Insert level L into component a (0-based). Returns the sign, or 0 when the
// level is already occupied.
int insert_level(WedgeState& s, int a, int L) {
  if (L < s.base[a]) return 0;
  const int bit = L - s.base[a];
  if (bit >= 64) throw ShapeError("Fock oracle window exceeded");
  const std::uint64_t m = std::uint64_t{1} << bit;
  if (s.mask[a] & m) return 0;
  int parity = std::popcount(s.mask[a] >> bit);  // occupied levels above L
  for (int b = 0; b < a; ++b) parity += s.base[b] + std::popcount(s.mask[b]);
  s.mask[a] |= m;
  return (parity % 2 == 0) ? 1 : -1;
}

}  // namespace

FockVector apply_psi_plus(const FockVector& v, int a, int K) {
  FockVector out(v.symbols());
  for (const auto& [s, c] : v.terms()) {
    WedgeState n = s;
    int sg = insert_level(n, a - 1, -K - 1);
    if (sg) out.add(n, sg > 0 ? c : -c);
  }
  return out;
}

FockVector apply_phi(const FockVector& v, int b, int K, int m1, const WeightMatrix& w, const TimeVector& u,
                     const std::optional<Triple>& nu) {
  const auto& syms = v.symbols();
  const int jmax = m1 - 1 - K;  // j = K + 1/2 + d with d = 0..jmax
  FockVector out(syms);
  if (jmax < 0) return out;
  int trace = nu ? (*nu)[0] + (*nu)[1] + (*nu)[2] : 0;
  for (int a = 1; a <= 3; ++a) {
    MultiPoly weight = w(a, b);
    int shift = 0;
    if (nu) {
      shift = (*nu)[a - 1];
      if ((trace + shift) % 2 != 0) weight = -weight;
    }
    if (weight.is_zero()) continue;
    auto S = schur_table(jmax, u[a], syms);
    for (int d = 0; d <= jmax; ++d) {
      if (S[d].is_zero()) continue;
      MultiPoly coeff = weight * S[d];
      const int L = -(K + d + shift) - 1;
      for (const auto& [s, c] : v.terms()) {
        WedgeState n = s;
        int sg = insert_level(n, a - 1, L);
        if (sg) out.add(n, sg > 0 ? c * coeff : -(c * coeff));
      }
    }
  }
  return out;
}

namespace {

FockVector apply_string(FockVector v, const ScalingParams& sp, const WeightMatrix& w, const TimeVector& u,
                        const std::optional<Triple>& nu) {
  const int m1 = sp.m[0], m2 = sp.m[1], m3 = sp.m[2];
  // Rightmost operator acts first: phi^(2)_{m1-1/2} ... phi^(2)_{m2+1/2}, then phi^(3).
  for (int K = m1 - 1; K >= m2; --K) v = apply_phi(v, 2, K, m1, w, u, nu);
  for (int K = m1 - 1; K >= m3; --K) v = apply_phi(v, 3, K, m1, w, u, nu);
  return v;
}

TimeVector zero_times(const SymbolsPtr& syms) {
  MultiPoly z(syms);
  return first_times({z, z, z}, 1);
}

}  // namespace

FockVector build_G_vacuum(const ScalingParams& sp, const WeightMatrix& w) {
  const int m1 = sp.m[0];
  return apply_string(FockVector::charged_vacuum(w.symbols(), {-m1, -m1, -m1}), sp, w, zero_times(w.symbols()),
                      std::nullopt);
}

MultiPoly tau_oracle(const ScalingParams& sp, const WeightMatrix& w, const TimeVector& u) {
  if (!sp.in_support) return MultiPoly(w.symbols());
  const int m1 = sp.m[0];
  auto v = apply_string(FockVector::charged_vacuum(w.symbols(), {-m1, -m1, -m1}), sp, w, u, std::nullopt);
  return v.vacuum_coefficient(sp.nu);
}

MultiPoly tau_oracle_conjugated(const ScalingParams& sp, const WeightMatrix& w, const TimeVector& u) {
  if (!sp.in_support) return MultiPoly(w.symbols());
  const int m1 = sp.m[0];
  const auto& nu = sp.nu;
  auto v = apply_string(FockVector::charged_vacuum(w.symbols(), {-m1 - nu[0], -m1 - nu[1], -m1 - nu[2]}), sp, w, u,
                        nu);
  return v.vacuum_coefficient({0, 0, 0}) * Rational(tau_sign(sp));
}

}  // namespace ptau
