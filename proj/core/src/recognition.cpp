#include "pgcomp/recognition.hpp"

#include "pgcomp/baseline.hpp"
#include "pgcomp/errors.hpp"

namespace pgcomp {

PinnedGame build_pinned_game(const SubgameMask& g, int s) {
  if (s < 0 || s >= g.universe() || !g.alive(s))
    throw InputError("build_pinned_game: pin vertex is not alive");
  const Arena& a = g.arena();

  PinnedGame out;
  std::vector<int> gadget_id(static_cast<size_t>(g.universe()), -1);
  ArenaBuilder b;
  for (int v = 0; v < g.universe(); ++v) {
    if (!g.alive(v)) continue;
    gadget_id[static_cast<size_t>(v)] = b.add_vertex(a.owner(v), a.priority(v), a.name(v));
    out.to_original.push_back(v);
  }
  out.subdivision_begin = b.vertex_count();

  int max_pri = 0;
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v)) max_pri = std::max(max_pri, a.priority(v));
  const int hub_priority = max_pri % 2 == 0 ? max_pri + 2 : max_pri + 1;

  std::vector<int> odd_gadget_vertices;
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v) && a.owner(v) == Player::Odd)
      odd_gadget_vertices.push_back(gadget_id[static_cast<size_t>(v)]);

  for (int v = 0; v < g.universe(); ++v) {
    if (!g.alive(v)) continue;
    const int gv = gadget_id[static_cast<size_t>(v)];
    for (int w : a.successors(v)) {
      if (!g.alive(w)) continue;
      const int gw = gadget_id[static_cast<size_t>(w)];
      if (a.owner(v) == Player::Even) {
        const int mid = b.add_vertex(Player::Odd, a.priority(v));
        out.to_original.push_back(-1);
        odd_gadget_vertices.push_back(mid);
        b.add_arc(gv, mid);
        b.add_arc(mid, gw);
      } else {
        b.add_arc(gv, gw);
      }
    }
  }

  const int hub = b.add_vertex(Player::Even, hub_priority);
  out.to_original.push_back(-1);
  for (int ov : odd_gadget_vertices) b.add_arc(ov, hub);
  b.add_arc(hub, gadget_id[static_cast<size_t>(s)]);

  out.gadget = b.build();
  out.pin = s;
  out.pin_gadget = gadget_id[static_cast<size_t>(s)];
  out.hub = hub;
  return out;
}

GlobalRecognizer zielonka_global_recognizer() {
  return [](const Arena& a) {
    const SubgameMask m(a);
    return solve_zielonka(m).regions.count(Player::Odd) == a.size();
  };
}

Regions solve_via_global_recognizer(const SubgameMask& g,
                                    const GlobalRecognizer& recognizer) {
  Regions out(g.universe());
  for (int s = 0; s < g.universe(); ++s) {
    if (!g.alive(s)) continue;
    const PinnedGame pinned = build_pinned_game(g, s);
    out.assign(s, recognizer(pinned.gadget) ? Player::Odd : Player::Even);
  }
  return out;
}

bool recognize_region(const SubgameMask& g, const VertexSet& candidate) {
  for (int v = 0; v < g.universe(); ++v)
    if (candidate.contains(v) && !g.alive(v))
      throw InputError("recognize_region: candidate contains a dead vertex");
  return solve_zielonka(g).regions.region(Player::Odd) == candidate;
}

}  // namespace pgcomp
