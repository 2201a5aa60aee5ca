#include "virtstring/signed_matrix.hpp"

#include <algorithm>

#include "virtstring/error.hpp"

namespace virtstring {

SignedBasedMatrix::SignedBasedMatrix(BasedMatrix b, int distinguished, Sign s)
    : base(std::move(b)), d(distinguished), sign(s) {
  if (d <= 0 || d >= base.size()) throw InvalidArgument("distinguished element must be a non-basepoint index");
}

SignedBasedMatrix signed_matrix(const SignedDiagram& g) {
  return SignedBasedMatrix(based_matrix(g.base), g.d + 1, g.sign);
}

namespace {

bool row_is(const BasedMatrix& m, int g, auto&& expected) {
  for (int h = 0; h < m.size(); ++h)
    if (m(g, h) != expected(h)) return false;
  return true;
}

bool d_annihilating_like(const SignedBasedMatrix& m) {
  return row_is(m.base, m.d, [](int) { return 0; });
}

bool d_core_like(const SignedBasedMatrix& m) {
  return row_is(m.base, m.d, [&](int h) { return m.base(0, h); });
}

std::vector<int> partners_of_d(const SignedBasedMatrix& m) {
  std::vector<int> out;
  for (int g = 1; g < m.base.size(); ++g)
    if (g != m.d && are_complementary(m.base, m.d, g)) out.push_back(g);
  return out;
}

SignedBasedMatrix apply_signed_deletion(const SignedBasedMatrix& m, const Deletion& del) {
  const Label dl = m.base.label(m.d);
  BasedMatrix reduced = apply_deletion(m.base, del);
  return SignedBasedMatrix(std::move(reduced), reduced.find(dl), m.sign);
}

}  // namespace

SignedClass signed_classify(const SignedBasedMatrix& m) {
  SignedClass c;
  const int n = m.base.size();
  c.d_annihilating_like = d_annihilating_like(m);
  c.d_core_like = d_core_like(m);
  c.d_self_complementary = is_self_complementary(m.base, m.d);
  c.s_annihilating_like = is_s_annihilating_like(m.base);
  c.complementary_partners_of_d = partners_of_d(m);
  c.annihilating.assign(static_cast<std::size_t>(n), false);
  c.core.assign(static_cast<std::size_t>(n), false);
  for (int g = 1; g < n; ++g) {
    if (g == m.d) continue;
    c.annihilating[static_cast<std::size_t>(g)] = is_annihilating(m.base, g);
    c.core[static_cast<std::size_t>(g)] = is_core(m.base, g);
    for (int h = g + 1; h < n; ++h)
      if (h != m.d && are_complementary(m.base, g, h)) c.complementary_pairs.emplace_back(g, h);
  }
  return c;
}

std::vector<Deletion> signed_deletions(const SignedBasedMatrix& m) {
  std::vector<Deletion> all = available_deletions(m.base);
  const Label dl = m.base.label(m.d);
  std::erase_if(all, [&](const Deletion& del) {
    return std::find(del.removed.begin(), del.removed.end(), dl) != del.removed.end();
  });
  return all;
}

bool is_primitive_signed(const SignedBasedMatrix& m) {
  if (!signed_deletions(m).empty()) return false;
  for (int g : partners_of_d(m))
    if (!signed_deletions(move_n(m, g)).empty()) return false;
  return true;
}

SignedBasedMatrix reduce_signed(const SignedBasedMatrix& m) {
  SignedBasedMatrix cur = m;
  while (true) {
    std::vector<Deletion> dels = signed_deletions(cur);
    if (!dels.empty()) {
      cur = apply_signed_deletion(cur, dels.front());
      continue;
    }
    bool swapped = false;
    for (int g : partners_of_d(cur)) {
      SignedBasedMatrix next = move_n(cur, g);
      if (!signed_deletions(next).empty()) {
        cur = std::move(next);
        swapped = true;
        break;
      }
    }
    if (!swapped) return cur;
  }
}

SignedBasedMatrix move_n(const SignedBasedMatrix& m, int partner) {
  if (partner == m.d || !are_complementary(m.base, m.d, partner))
    throw InvalidArgument("N'': element is not complementary to the distinguished element");
  return SignedBasedMatrix(m.base, partner, flip(m.sign));
}

SignedBasedMatrix move_d12(const SignedBasedMatrix& m) {
  if (!d_annihilating_like(m)) throw InvalidArgument("D''12 needs an annihilating-like distinguished element");
  std::vector<int> row(static_cast<std::size_t>(m.base.size()));
  for (int h = 0; h < m.base.size(); ++h) row[static_cast<std::size_t>(h)] = m.base(0, h);
  row[static_cast<std::size_t>(m.d)] = 0;
  return SignedBasedMatrix(m.base.with_row(m.d, row), m.d, flip(m.sign));
}

SignedBasedMatrix move_d21(const SignedBasedMatrix& m) {
  if (!d_core_like(m)) throw InvalidArgument("D''21 needs a core-like distinguished element");
  const std::vector<int> row(static_cast<std::size_t>(m.base.size()), 0);
  return SignedBasedMatrix(m.base.with_row(m.d, row), m.d, flip(m.sign));
}

SignedBasedMatrix move_d33(const SignedBasedMatrix& m) {
  if (!is_self_complementary(m.base, m.d))
    throw InvalidArgument("D''33 needs a self-complementary distinguished element");
  return switch_sign(m);
}

SignedBasedMatrix switch_sign(const SignedBasedMatrix& m) { return SignedBasedMatrix(m.base, m.d, flip(m.sign)); }

std::vector<SignedBasedMatrix> d_moves(const SignedBasedMatrix& m) {
  if (!is_primitive_signed(m)) throw InvalidArgument("d_moves needs a primitive signed singular based matrix");
  std::vector<SignedBasedMatrix> out;
  if (d_annihilating_like(m)) out.push_back(move_d12(m));
  if (d_core_like(m)) out.push_back(move_d21(m));
  if (is_self_complementary(m.base, m.d)) out.push_back(move_d33(m));
  for (int g : partners_of_d(m)) out.push_back(move_n(m, g));
  return out;
}

CanonicalKey signed_canonical_form(const SignedBasedMatrix& m, int cap) {
  std::vector<int> order{0, m.d};
  for (int g = 1; g < m.base.size(); ++g)
    if (g != m.d) order.push_back(g);
  const BasedMatrix arranged = m.base.permuted(order);
  return {std::string(1, sign_char(m.sign)) + detail::canonicalize(arranged, 2, cap).second};
}

bool signed_homology_equivalent(const SignedBasedMatrix& m1, const SignedBasedMatrix& m2, int cap) {
  if (!is_primitive_signed(m2)) throw InvalidArgument("signed_homology_equivalent needs primitive inputs");
  const CanonicalKey target = signed_canonical_form(m2, cap);
  if (signed_canonical_form(m1, cap) == target) return true;
  for (const SignedBasedMatrix& x : d_moves(m1))
    if (signed_canonical_form(x, cap) == target) return true;
  return false;
}

std::vector<SignedBasedMatrix> primitive_orbit(const SignedBasedMatrix& primitive) {
  std::vector<SignedBasedMatrix> out{primitive};
  std::vector<CanonicalKey> seen{signed_canonical_form(primitive)};
  for (const SignedBasedMatrix& x : d_moves(primitive)) {
    SignedBasedMatrix p = reduce_signed(x);
    CanonicalKey k = signed_canonical_form(p);
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
    seen.push_back(std::move(k));
    out.push_back(std::move(p));
  }
  return out;
}

CanonicalKey signed_class_key(const SignedBasedMatrix& m, int cap) {
  std::vector<std::string> keys;
  for (const SignedBasedMatrix& p : primitive_orbit(reduce_signed(m))) keys.push_back(signed_canonical_form(p, cap).bytes);
  std::sort(keys.begin(), keys.end());
  CanonicalKey out;
  for (const std::string& k : keys) {
    detail::append_int(out.bytes, static_cast<int>(k.size()));
    out.bytes += k;
  }
  return out;
}

SignedBasedMatrix standard_primitive(const SignedBasedMatrix& m) {
  SignedBasedMatrix p = reduce_signed(m);
  const SignedClass c = signed_classify(p);
  if (!c.d_ordinary_core() && !c.d_ordinary_annihilating())
    throw InvalidArgument("standard primitive is defined only for an ordinary core or annihilating distinguished element");
  if (p.sign == m.sign) return p;
  return c.d_ordinary_annihilating() ? move_d12(p) : move_d21(p);
}

}  // namespace virtstring
