#include "qit/classify.hpp"

#include <algorithm>

#include "qit/representation.hpp"

namespace qit {

namespace {

bool in_ideal(ArrowId x, ArrowId y, const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  return a.is_zero(Path::from_arrows(q, {x, y}));
}

}  // namespace

ClassFlags classify(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  ClassFlags f;
  f.monomial = a.is_monomial();

  f.radical_square_zero = true;
  for (ArrowId x = 0; x < q.arrow_count() && f.radical_square_zero; ++x)
    for (ArrowId y : q.arrows_from(q.arrow(x).target))
      if (!in_ideal(x, y, a)) {
        f.radical_square_zero = false;
        break;
      }

  f.right_serial = true;
  for (VertexId v = 0; v < q.vertex_count() && f.right_serial; ++v) {
    const auto tops = radical_layer_tops(projective_module(a, v), q);
    f.right_serial = std::all_of(tops.begin(), tops.end(), [](std::size_t t) { return t <= 1; });
  }

  bool sb = true;
  bool one_zero_after = true;
  bool one_zero_before = true;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (q.arrows_from(v).size() > 2 || q.arrows_to(v).size() > 2) sb = false;
  for (ArrowId b = 0; b < q.arrow_count(); ++b) {
    std::size_t nonzero_after = 0, zero_after = 0, nonzero_before = 0, zero_before = 0;
    for (ArrowId c : q.arrows_from(q.arrow(b).target)) (in_ideal(b, c, a) ? zero_after : nonzero_after)++;
    for (ArrowId c : q.arrows_to(q.arrow(b).source)) (in_ideal(c, b, a) ? zero_before : nonzero_before)++;
    if (nonzero_after > 1 || nonzero_before > 1) sb = false;
    if (zero_after > 1) one_zero_after = false;
    if (zero_before > 1) one_zero_before = false;
  }
  f.special_biserial = sb;

  const bool length_two = std::all_of(a.rules().begin(), a.rules().end(),
                                      [](const Rule& r) { return r.lead.length() == 2; });
  f.gentle = sb && f.monomial && length_two && one_zero_after && one_zero_before;
  return f;
}

}  // namespace qit
