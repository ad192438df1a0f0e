#include "zonotile/tiling.hpp"

#include <algorithm>

namespace zonotile {

Tiling::Tiling(ContextPtr ctx, std::vector<Mask> labels)
    : ctx_(std::move(ctx)), labels_(std::move(labels)) {
  if (labels_.size() != ctx_->basis_list.size())
    throw InvalidTiling("tiling: one label set per basis required");
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] & ctx_->basis_list[i])
      throw InvalidTiling("tiling: label set meets its basis");
}

Mask Tiling::label_of(Mask B) const {
  auto it = ctx_->basis_index.find(B);
  if (it == ctx_->basis_index.end())
    throw InputError("tiling: " + mask_to_string(B) + " is not a basis");
  return labels_[it->second];
}

std::vector<Mask> labels_from_orientation(const CircuitOrientation& o) {
  const Context& ctx = *o.ctx;
  std::vector<Mask> labels(ctx.basis_list.size(), 0);
  for (size_t bi = 0; bi < ctx.basis_list.size(); ++bi)
    for (const Context::ExtEntry& e : ctx.ext[bi])
      if (o.sign[e.circuit] == e.want) labels[bi] |= Mask{1} << e.j;
  return labels;
}

Tiling tiling_from_heights(const ContextPtr& ctx, const RatVec& h) {
  CircuitOrientation o = orientation_from_heights(ctx, h);
  return tiling_from_orientation(o, true);
}

Tiling tiling_from_orientation(const CircuitOrientation& o, bool validate) {
  Tiling t(o.ctx, labels_from_orientation(o));
  if (validate) {
    validate_tiling(t);
    if (!(orientation_from_tiling(t) == o))
      throw InvalidTiling("tiling: orientation does not reproduce itself");
  }
  return t;
}

std::vector<Mask> vertex_labels(const Tiling& t) {
  std::vector<Mask> out;
  out.reserve(t.num_tiles() << t.d());
  for (int i = 0; i < t.num_tiles(); ++i) {
    Mask A = t.label_at(i);
    for_each_submask(t.basis_at(i), [&](Mask s) { out.push_back(A | s); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CircuitOrientation orientation_from_tiling(const Tiling& t) {
  const ContextPtr& ctx = t.context();
  std::vector<Mask> verts = vertex_labels(t);
  CircuitOrientation o;
  o.ctx = ctx;
  o.sign.resize(ctx->num_circuits());
  for (int ci = 0; ci < ctx->num_circuits(); ++ci) {
    const Circuit& c = ctx->circuit_list[ci];
    bool pos = false, neg = false;
    for (Mask s : verts) {
      if ((c.plus & ~s) == 0 && (c.minus & s) == 0) pos = true;
      if ((c.minus & ~s) == 0 && (c.plus & s) == 0) neg = true;
      if (pos && neg) break;
    }
    if (pos == neg)
      throw InvalidTiling("tiling: vertex labels orient circuit " +
                          signed_set_to_string(c) +
                          (pos ? " both ways" : " neither way"));
    o.sign[ci] = pos ? +1 : -1;
  }
  return o;
}

void validate_tiling(const Tiling& t) {
  // The bases bijection is structural (one label per basis, disjointness is
  // checked on construction); the orientation scan below enforces the
  // remaining combinatorial condition.
  orientation_from_tiling(t);
}

Tiling opposite(const Tiling& t) {
  Mask all = full_mask(t.n());
  std::vector<Mask> labels(t.num_tiles());
  for (int i = 0; i < t.num_tiles(); ++i)
    labels[i] = all & ~(t.label_at(i) | t.basis_at(i));
  return Tiling(t.context(), std::move(labels));
}

}  // namespace zonotile
