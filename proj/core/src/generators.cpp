#include <algorithm>
#include <cmath>

#include "pgcomp/errors.hpp"
#include "pgcomp/generators.hpp"
#include "pgcomp/rng.hpp"

namespace pgcomp {

namespace {

void check_spec(const GenSpec& spec) {
  if (spec.n < 0) throw InputError("generator: negative size");
  if (spec.max_priority < 0) throw InputError("generator: negative priority bound");
  if (spec.density < 0.0 || spec.density > 1.0)
    throw InputError("generator: density must lie in [0, 1]");
}

int draw_priority(SplitRng& rng, int max_priority) {
  return static_cast<int>(rng.below(static_cast<std::uint32_t>(max_priority) + 1));
}

/// One or both directions between u and v, never neither.
void add_cross_pair(ArenaBuilder& b, SplitRng& rng, int u, int v) {
  switch (rng.below(3)) {
    case 0: b.add_arc(u, v); break;
    case 1: b.add_arc(v, u); break;
    default: b.add_arc(u, v); b.add_arc(v, u); break;
  }
}

}  // namespace

const char* gen_class_name(GenClass c) {
  switch (c) {
    case GenClass::Random: return "random";
    case GenClass::SinglePlayer: return "single-player";
    case GenClass::WeakTournament: return "tournament";
    case GenClass::HalfJoin: return "half-join";
    case GenClass::Join: return "join";
    case GenClass::GJoin: return "g-join";
    case GenClass::BlockCactus: return "block-cactus";
    case GenClass::AddVertex: return "add-vertex";
  }
  return "unknown";
}

Arena gen_random(const GenSpec& spec) {
  check_spec(spec);
  SplitRng rng(spec.seed);
  ArenaBuilder b(spec.n);
  for (int v = 0; v < spec.n; ++v)
    b.add_vertex(rng.player(), draw_priority(rng, spec.max_priority));
  for (int u = 0; u < spec.n; ++u)
    for (int v = 0; v < spec.n; ++v)
      if (rng.chance(spec.density)) b.add_arc(u, v);
  return b.build();
}

Arena gen_single_player(const GenSpec& spec) {
  check_spec(spec);
  SplitRng rng(spec.seed);
  ArenaBuilder b(spec.n);
  for (int v = 0; v < spec.n; ++v)
    b.add_vertex(spec.single_owner, draw_priority(rng, spec.max_priority));
  for (int u = 0; u < spec.n; ++u)
    for (int v = 0; v < spec.n; ++v)
      if (rng.chance(spec.density)) b.add_arc(u, v);
  return b.build();
}

Arena gen_weak_tournament(const GenSpec& spec) {
  check_spec(spec);
  SplitRng rng(spec.seed);
  ArenaBuilder b(spec.n);
  std::vector<Player> owner(static_cast<size_t>(spec.n));
  for (int v = 0; v < spec.n; ++v) {
    owner[static_cast<size_t>(v)] = rng.player();
    b.add_vertex(owner[static_cast<size_t>(v)], draw_priority(rng, spec.max_priority));
  }
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      if (owner[static_cast<size_t>(u)] != owner[static_cast<size_t>(v)]) {
        add_cross_pair(b, rng, u, v);
      } else {
        if (rng.chance(spec.density)) b.add_arc(u, v);
        if (rng.chance(spec.density)) b.add_arc(v, u);
      }
    }
  }
  for (int v = 0; v < spec.n; ++v)
    if (rng.chance(spec.density)) b.add_arc(v, v);
  return b.build();
}

Arena gen_arena(const GenSpec& spec) {
  switch (spec.cls) {
    case GenClass::Random: return gen_random(spec);
    case GenClass::SinglePlayer: return gen_single_player(spec);
    case GenClass::WeakTournament: return gen_weak_tournament(spec);
    default:
      throw InputError(std::string("gen_arena: class ") +
                       gen_class_name(spec.cls) +
                       " is not a side/base class");
  }
}

std::pair<Arena, JoinDecomposition> gen_join(const GenSpec& left,
                                             const GenSpec& right,
                                             std::uint64_t seed) {
  const Arena gl = gen_arena(left);
  const Arena gr = gen_arena(right);
  SplitRng rng(seed);

  const int nl = gl.size();
  const int n = nl + gr.size();
  ArenaBuilder b(n);
  for (int v = 0; v < gl.size(); ++v)
    b.add_vertex(gl.owner(v), gl.priority(v), gl.name(v));
  for (int v = 0; v < gr.size(); ++v)
    b.add_vertex(gr.owner(v), gr.priority(v), gr.name(v));
  for (int v = 0; v < gl.size(); ++v)
    for (int w : gl.successors(v)) b.add_arc(v, w);
  for (int v = 0; v < gr.size(); ++v)
    for (int w : gr.successors(v)) b.add_arc(nl + v, nl + w);

  const double same_density = (left.density + right.density) / 2.0;
  for (int x = 0; x < gl.size(); ++x) {
    for (int y = 0; y < gr.size(); ++y) {
      if (gl.owner(x) != gr.owner(y)) {
        add_cross_pair(b, rng, x, nl + y);
      } else {
        if (rng.chance(same_density)) b.add_arc(x, nl + y);
        if (rng.chance(same_density)) b.add_arc(nl + y, x);
      }
    }
  }

  JoinDecomposition dec{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < nl; ++v) dec.left.insert(v);
  for (int v = nl; v < n; ++v) dec.right.insert(v);
  return {b.build(), std::move(dec)};
}

std::pair<Arena, GJoinDecomposition> gen_g_join(const GenSpec& single_spec,
                                                const GenSpec& class_spec,
                                                double m_fraction,
                                                std::uint64_t seed) {
  if (m_fraction <= 0.0 || m_fraction > 1.0)
    throw InputError("gen_g_join: m-fraction must lie in (0, 1]");
  GenSpec sspec = single_spec;
  sspec.cls = GenClass::SinglePlayer;
  const Arena gs = gen_single_player(sspec);
  const Arena gc = gen_arena(class_spec);
  SplitRng rng(seed);

  const Player i = sspec.single_owner;
  const int ns = gs.size();
  const int n = ns + gc.size();

  std::vector<int> candidates;
  for (int v = 0; v < gc.size(); ++v)
    if (gc.owner(v) == opponent(i)) candidates.push_back(ns + v);
  if (candidates.empty())
    throw GenerationError(
        "gen_g_join: class side has no vertex owned by the single side's "
        "opponent, so M would be empty");

  const int m_size = std::clamp(
      static_cast<int>(std::ceil(m_fraction * static_cast<double>(candidates.size()))),
      1, static_cast<int>(candidates.size()));
  for (int j = 0; j < m_size; ++j) {
    const int k = j + static_cast<int>(rng.below(
                          static_cast<std::uint32_t>(candidates.size() - static_cast<size_t>(j))));
    std::swap(candidates[static_cast<size_t>(j)], candidates[static_cast<size_t>(k)]);
  }
  candidates.resize(static_cast<size_t>(m_size));
  std::sort(candidates.begin(), candidates.end());

  ArenaBuilder b(n);
  for (int v = 0; v < gs.size(); ++v)
    b.add_vertex(gs.owner(v), gs.priority(v), gs.name(v));
  for (int v = 0; v < gc.size(); ++v)
    b.add_vertex(gc.owner(v), gc.priority(v), gc.name(v));
  for (int v = 0; v < gs.size(); ++v)
    for (int w : gs.successors(v)) b.add_arc(v, w);
  for (int v = 0; v < gc.size(); ++v)
    for (int w : gc.successors(v)) b.add_arc(ns + v, ns + w);
  for (int x : candidates)
    for (int y = 0; y < ns; ++y) add_cross_pair(b, rng, x, y);

  GJoinDecomposition dec{VertexSet(n), VertexSet(n), VertexSet(n), i};
  for (int v = 0; v < ns; ++v) dec.single_side.insert(v);
  for (int v = ns; v < n; ++v) dec.class_side.insert(v);
  for (int x : candidates) dec.m_set.insert(x);
  return {b.build(), std::move(dec)};
}

Arena gen_block_cactus(const BlockCactusSpec& spec) {
  if (spec.blocks < 1) throw InputError("gen_block_cactus: need at least one block");
  if (spec.block_min < 2 || spec.block_max < spec.block_min)
    throw InputError("gen_block_cactus: invalid block size range");
  if (!spec.cliques && !spec.cycles)
    throw InputError("gen_block_cactus: no block kind allowed");
  if (spec.max_priority < 0)
    throw InputError("gen_block_cactus: negative priority bound");

  SplitRng rng(spec.seed);
  std::vector<Player> owner;
  std::vector<int> priority;
  std::vector<std::pair<int, int>> arcs;

  auto pick_clique = [&]() {
    if (spec.cliques && spec.cycles) return rng.below(2) == 0;
    return spec.cliques;
  };

  for (int blk = 0; blk < spec.blocks; ++blk) {
    const bool clique = pick_clique();
    const int size = rng.range(spec.block_min, spec.block_max);

    // For every block after the first, one of its vertices is identified
    // with an existing vertex, inheriting owner and priority.
    int paste_target = -1;
    int paste_local = -1;
    if (blk > 0) {
      paste_target = static_cast<int>(rng.below(static_cast<std::uint32_t>(owner.size())));
      paste_local = static_cast<int>(rng.below(static_cast<std::uint32_t>(size)));
    }

    std::vector<int> ids(static_cast<size_t>(size));
    for (int j = 0; j < size; ++j) {
      if (j == paste_local) {
        ids[static_cast<size_t>(j)] = paste_target;
      } else {
        ids[static_cast<size_t>(j)] = static_cast<int>(owner.size());
        owner.push_back(rng.player());
        priority.push_back(draw_priority(rng, spec.max_priority));
      }
    }

    if (clique) {
      for (int a = 0; a < size; ++a) {
        for (int c = a + 1; c < size; ++c) {
          switch (rng.below(3)) {
            case 0: arcs.emplace_back(ids[static_cast<size_t>(a)], ids[static_cast<size_t>(c)]); break;
            case 1: arcs.emplace_back(ids[static_cast<size_t>(c)], ids[static_cast<size_t>(a)]); break;
            default:
              arcs.emplace_back(ids[static_cast<size_t>(a)], ids[static_cast<size_t>(c)]);
              arcs.emplace_back(ids[static_cast<size_t>(c)], ids[static_cast<size_t>(a)]);
              break;
          }
        }
      }
    } else {
      for (int a = 0; a < size; ++a)
        arcs.emplace_back(ids[static_cast<size_t>(a)], ids[static_cast<size_t>((a + 1) % size)]);
    }
  }

  ArenaBuilder b(static_cast<int>(owner.size()));
  for (size_t v = 0; v < owner.size(); ++v)
    b.add_vertex(owner[v], priority[v]);
  for (auto [from, to] : arcs) b.add_arc(from, to);
  return b.build();
}

std::pair<Arena, ApexCertificate> gen_add_vertex(const GenSpec& base,
                                                 std::uint64_t seed) {
  const Arena g = gen_arena(base);
  SplitRng rng(seed);
  const int nb = g.size();

  ArenaBuilder b(nb + 1);
  for (int v = 0; v < nb; ++v) b.add_vertex(g.owner(v), g.priority(v), g.name(v));
  const int apex = b.add_vertex(rng.player(), draw_priority(rng, base.max_priority));
  for (int v = 0; v < nb; ++v)
    for (int w : g.successors(v)) b.add_arc(v, w);
  for (int v = 0; v < nb; ++v) {
    if (rng.chance(base.density)) b.add_arc(apex, v);
    if (rng.chance(base.density)) b.add_arc(v, apex);
  }
  if (rng.chance(base.density)) b.add_arc(apex, apex);
  return {b.build(), ApexCertificate{apex, gen_class_name(base.cls)}};
}

}  // namespace pgcomp
