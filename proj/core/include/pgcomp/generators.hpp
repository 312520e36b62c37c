#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "pgcomp/add_vertex.hpp"
#include "pgcomp/arena.hpp"
#include "pgcomp/join.hpp"

namespace pgcomp {

enum class GenClass {
  Random,
  SinglePlayer,
  WeakTournament,
  HalfJoin,
  Join,
  GJoin,
  BlockCactus,
  AddVertex,
};

const char* gen_class_name(GenClass c);

/// Parameters of one generated instance. Identical specs produce
/// bit-identical games on every platform.
struct GenSpec {
  GenClass cls = GenClass::Random;
  int n = 0;
  int max_priority = 5;
  double density = 0.3;
  std::uint64_t seed = 0;
  Player single_owner = Player::Odd;  // only for SinglePlayer sides
};

/// Every ordered pair (self-loops included) becomes an arc independently
/// with the given density; owners fair-coin, priorities uniform.
Arena gen_random(const GenSpec& spec);

/// gen_random with all owners forced to spec.single_owner.
Arena gen_single_player(const GenSpec& spec);

/// Random owners and priorities; every cross-owner pair gets one or both
/// arc directions, same-owner arcs and self-loops follow the density.
Arena gen_weak_tournament(const GenSpec& spec);

/// Dispatch for side/base specs (Random, SinglePlayer, WeakTournament).
Arena gen_arena(const GenSpec& spec);

/// Disjoint union of the two sides (left ids first) plus at least one arc
/// direction for every opposite-owner cross pair. With edgeless sides the
/// result is a biorientation of a complete bipartite graph.
std::pair<Arena, JoinDecomposition> gen_join(const GenSpec& left,
                                             const GenSpec& right,
                                             std::uint64_t seed);

/// Single side (owned by single_spec.single_owner, ids first) and a class
/// side, with the hub M sampled from the class side's opposite-owner
/// vertices at the given fraction and full adjacency between M and the
/// single side; no other cross arcs. Throws GenerationError when the class
/// side offers no opposite-owner vertex.
std::pair<Arena, GJoinDecomposition> gen_g_join(const GenSpec& single_spec,
                                                const GenSpec& class_spec,
                                                double m_fraction,
                                                std::uint64_t seed);

struct BlockCactusSpec {
  int blocks = 1;
  bool cliques = true;
  bool cycles = true;
  int block_min = 2;
  int block_max = 5;
  int max_priority = 5;
  std::uint64_t seed = 0;
};

/// Clique blocks (orientations/biorientations of complete graphs) and
/// directed-cycle blocks pasted repeatedly at single shared vertices whose
/// owner and priority match by construction.
Arena gen_block_cactus(const BlockCactusSpec& spec);

/// A base-class game plus one extra vertex wired in arbitrarily, with the
/// apex certificate naming the base class.
std::pair<Arena, ApexCertificate> gen_add_vertex(const GenSpec& base,
                                                 std::uint64_t seed);

}  // namespace pgcomp
