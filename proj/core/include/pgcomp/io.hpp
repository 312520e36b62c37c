#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgcomp/arena.hpp"
#include "pgcomp/regions.hpp"

namespace pgcomp {

/// A parsed game plus the original vertex ids. Input ids need not be
/// contiguous; they are compacted to 0..n-1 in ascending order and
/// external_ids maps each compact id back.
struct ParsedGame {
  Arena arena;
  std::vector<std::int64_t> external_ids;
};

/// PGSolver text format: an optional header `parity <max-id>;` followed by
/// `<id> <priority> <owner> <succ>,<succ>,... ["name"];` statements, owner
/// 0 = Even, 1 = Odd, in any order. An empty successor field denotes a dead
/// end; that is an extension of the classic format and is rejected when
/// `strict` is set. Empty input is the empty game.
ParsedGame parse_pgsolver(std::string_view text, bool strict = false);

/// Canonical form: header present, vertices ascending, successors
/// ascending, names quoted when non-empty, one statement per line. The
/// empty game serializes to an empty string. parse(write(a)) reproduces a.
std::string write_pgsolver(const Arena& arena);

struct SolutionEntry {
  std::int64_t vertex = 0;
  Player winner = Player::Even;
  std::optional<std::int64_t> strategy;
};

/// One line per vertex: `<id> <winner> [<strategy-successor>]`, winner
/// 0 = Even, 1 = Odd. A strategy entry appears only on vertices owned by
/// their winner.
struct SolutionFile {
  std::vector<SolutionEntry> entries;
};

SolutionFile parse_solution(std::string_view text);
std::string write_solution(const SolutionFile& solution);

/// Solution rows for every covered vertex, ascending. When external ids are
/// given they replace the compact ids in both columns.
SolutionFile solution_from_regions(
    const Regions& regions, const Arena& arena,
    const std::vector<std::int64_t>* external_ids = nullptr);

}  // namespace pgcomp
