#include "zonotile/flips.hpp"

#include "zonotile/simplex.hpp"

namespace zonotile {

namespace {

struct CircuitRef {
  int idx;
  Circuit canon;
};

CircuitRef resolve_circuit(const Context& ctx, const Circuit& c) {
  int idx = ctx.find_circuit(c.support());
  if (idx < 0 || !(ctx.circuit_list[idx] == c || ctx.circuit_list[idx] == c.negated()))
    throw InputError("flip: " + signed_set_to_string(c) +
                     " is not a circuit of this configuration");
  return {idx, ctx.circuit_list[idx]};
}

}  // namespace

FlipRecord flip_data(const Tiling& t, const Circuit& c) {
  const Context& ctx = *t.context();
  CircuitRef ref = resolve_circuit(ctx, c);
  const Circuit& canon = ref.canon;
  Mask supp = canon.support();

  FlipRecord rec;
  rec.circuit = canon;
  rec.ctr = ctx.ctr_bases[ref.idx];
  if (rec.ctr.empty())
    throw std::logic_error("flip: circuit without contraction bases");

  // Determine the orientation from any adjacent tile: for B = (supp - j) + J,
  // membership of j in the label of B decides the sign of the circuit with j
  // positive.
  {
    int j = mask_to_vec(supp)[0];
    Mask B = (supp & ~(Mask{1} << j)) | rec.ctr[0];
    bool in_label = contains(t.label_of(B), j);
    bool j_plus = contains(canon.plus, j);
    rec.orientation = (in_label == j_plus) ? +1 : -1;
  }
  Mask pos = rec.orientation > 0 ? canon.plus : canon.minus;

  for (Mask J : rec.ctr) {
    Mask common = 0;
    bool first = true;
    for (int j : mask_to_vec(supp)) {
      Mask B = (supp & ~(Mask{1} << j)) | J;
      Mask A = t.label_of(B);
      bool want = contains(pos, j);
      if (contains(A, j) != want)
        throw std::logic_error("flip: tile labels disagree with the orientation");
      Mask part = A & ~(Mask{1} << j);
      if (first) {
        common = part;
        first = false;
      } else if (part != common) {
        throw FlipUnavailable("no flip along " + signed_set_to_string(canon) +
                              ": residual labels differ at J = " + mask_to_string(J));
      }
    }
    rec.parts.push_back(common);
    rec.levels.push_back(popcount(common) + 1);
    rec.level_set.insert(popcount(common) + 1);
  }
  return rec;
}

Tiling apply_flip(const Tiling& t, const Circuit& c) {
  const Context& ctx = *t.context();
  FlipRecord rec = flip_data(t, c);
  Mask supp = rec.circuit.support();
  std::vector<Mask> labels = t.labels();
  for (Mask J : rec.ctr) {
    for (int j : mask_to_vec(supp)) {
      Mask B = (supp & ~(Mask{1} << j)) | J;
      labels[ctx.basis_index.at(B)] ^= Mask{1} << j;
    }
  }
  Tiling next(t.context(), std::move(labels));
  // The result must be a tiling whose orientation differs from t's exactly
  // at the flipped circuit.
  CircuitOrientation before = orientation_from_tiling(t);
  CircuitOrientation after;
  try {
    after = orientation_from_tiling(next);
  } catch (const InvalidTiling& e) {
    throw FlipUnavailable(std::string("no flip along ") +
                          signed_set_to_string(rec.circuit) + ": " + e.what());
  }
  int ci = ctx.find_circuit(supp);
  for (int i = 0; i < ctx.num_circuits(); ++i) {
    int8_t want = (i == ci) ? static_cast<int8_t>(-before.sign[i]) : before.sign[i];
    if (after.sign[i] != want)
      throw FlipUnavailable("no flip along " + signed_set_to_string(rec.circuit) +
                            ": orientation changed away from the circuit");
  }
  return next;
}

std::vector<Circuit> combinatorial_flips(const Tiling& t) {
  std::vector<Circuit> out;
  for (const Circuit& c : t.context()->circuit_list) {
    try {
      apply_flip(t, c);
      out.push_back(c);
    } catch (const FlipUnavailable&) {
    }
  }
  return out;
}

std::vector<Circuit> available_wall_flips(const CircuitOrientation& o) {
  const Context& ctx = *o.ctx;
  std::vector<Circuit> out;
  for (int flip = 0; flip < ctx.num_circuits(); ++flip) {
    std::vector<std::pair<RatVec, int>> rows;
    rows.reserve(ctx.num_circuits());
    for (int i = 0; i < ctx.num_circuits(); ++i)
      rows.emplace_back(ctx.alpha[i], i == flip ? -o.sign[i] : o.sign[i]);
    if (feasible(rows).feasible) out.push_back(ctx.circuit_list[flip]);
  }
  return out;
}

}  // namespace zonotile
