#include "rooted_iso/generator.hpp"

namespace rooted_iso {

Portrait evaluate(const IsoGenerator &gen, std::size_t d,
                  std::uint64_t bound) {
  if (d > gen.vs.max_depth())
    throw InputError("evaluation depth exceeds generator tree depth");
  gen.vs.layer_size(d, bound);
  PortraitBuilder b(gen.vs, d);
  for (std::size_t k = 0; k < d; ++k) {
    std::uint64_t L = gen.vs.layer_size(k, bound);
    for (std::uint64_t r = 0; r < L; ++r) {
      Vertex v = vertex_from_rank(gen.vs, k, r);
      Perm p = gen.rule(v);
      if (p.degree() != gen.vs.branching(k))
        throw InputError("generator rule returned perm of wrong degree at " +
                         to_string(v));
      b.set(k, r, std::move(p));
    }
  }
  return std::move(b).build();
}

} // namespace rooted_iso
