#include "zonotile/context.hpp"

namespace zonotile {

std::shared_ptr<const Context> Context::make(Configuration cfg) {
  auto ctx = std::make_shared<Context>();
  ctx->cfg = std::move(cfg);
  const Configuration& c = ctx->cfg;

  ctx->basis_list = bases(c);
  ctx->volume.reserve(ctx->basis_list.size());
  for (size_t i = 0; i < ctx->basis_list.size(); ++i) {
    ctx->basis_index.emplace(ctx->basis_list[i], static_cast<int>(i));
    ctx->volume.push_back(basis_volume(c, ctx->basis_list[i]));
    ctx->zonotope_volume += ctx->volume.back();
  }

  ctx->circuit_list = circuits(c);
  ctx->alpha.reserve(ctx->circuit_list.size());
  ctx->ctr_bases.reserve(ctx->circuit_list.size());
  for (size_t i = 0; i < ctx->circuit_list.size(); ++i) {
    const Circuit& cir = ctx->circuit_list[i];
    ctx->circuit_by_support.emplace(cir.support(), static_cast<int>(i));
    ctx->ctr_bases.push_back(contraction_bases(c, cir));
    RatVec total(c.n(), Rat(0));
    for (Mask J : ctx->ctr_bases.back()) total = total + dependence_vector(c, cir, J);
    ctx->alpha.push_back(std::move(total));
  }

  ctx->ext.resize(ctx->basis_list.size());
  for (size_t bi = 0; bi < ctx->basis_list.size(); ++bi) {
    Mask B = ctx->basis_list[bi];
    for (int j = 0; j < c.n(); ++j) {
      if (contains(B, j)) continue;
      // v_j = sum over b in B of coeff_b v_b; the circuit in B + {j} consists
      // of j and the b with nonzero coefficient, with signs of the dependence
      // v_j - sum coeff_b v_b = 0.
      RatMat m = c.lift_columns(B);
      RatVec rhs = c.lift[j];
      std::optional<RatVec> coeff = solve(std::move(m), std::move(rhs));
      if (!coeff) throw std::logic_error("context: basis failed to span");
      std::vector<int> bidx = mask_to_vec(B);
      SignedSet s;
      s.plus |= Mask{1} << j;
      for (size_t t = 0; t < bidx.size(); ++t) {
        int sg = (*coeff)[t].sign();
        if (sg > 0)
          s.minus |= Mask{1} << bidx[t];
        else if (sg < 0)
          s.plus |= Mask{1} << bidx[t];
      }
      int8_t want = +1;
      Mask supp = s.support();
      if (contains(s.minus, mask_to_vec(supp)[0])) {
        s = s.negated();
        want = -1;  // canonical circuit has j in its minus part
      }
      int ci = ctx->find_circuit(supp);
      if (ci < 0 || !(ctx->circuit_list[ci] == s))
        throw std::logic_error("context: inconsistent circuit table");
      ctx->ext[bi].push_back({static_cast<int8_t>(j), ci, want});
    }
  }
  return ctx;
}

int CircuitOrientation::of(const Circuit& c) const {
  int idx = ctx->find_circuit(c.support());
  if (idx < 0) throw InputError("orientation: not a circuit of this configuration");
  const Circuit& canon = ctx->circuit_list[idx];
  if (canon == c) return sign[idx];
  if (canon == c.negated()) return -sign[idx];
  throw InputError("orientation: signed set is not a circuit of this configuration");
}

bool is_generic(const Context& ctx, const RatVec& h) {
  if (static_cast<int>(h.size()) != ctx.n())
    throw InputError("height vector must have n coordinates");
  for (const RatVec& a : ctx.alpha)
    if (dot(h, a).is_zero()) return false;
  return true;
}

CircuitOrientation orientation_from_heights(const ContextPtr& ctx, const RatVec& h) {
  if (static_cast<int>(h.size()) != ctx->n())
    throw InputError("height vector must have n coordinates");
  CircuitOrientation o;
  o.ctx = ctx;
  o.sign.resize(ctx->num_circuits());
  for (int i = 0; i < ctx->num_circuits(); ++i) {
    int s = dot(h, ctx->alpha[i]).sign();
    if (s == 0) throw NonGenericHeight(ctx->circuit_list[i]);
    o.sign[i] = static_cast<int8_t>(s);
  }
  return o;
}

RatVec canonical_height(const Context& ctx) {
  mpz_class M(2);
  for (;;) {
    RatVec h(ctx.n());
    mpz_class p(1);
    for (int i = ctx.n() - 1; i >= 0; --i) {
      h[i] = Rat(p);
      p *= M;
    }
    if (is_generic(ctx, h)) return h;
    M *= 2;
  }
}

}  // namespace zonotile
