#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangle/cascade.hpp"
#include "tangle/enumerate.hpp"
#include "tangle/flype.hpp"

namespace tangle {

/// Largest n covered by the published tables.
inline constexpr int kReferenceMaxN = 12;

/// Published counts for n = 1..12 and 2 <= k <= n+1, zeros included.
/// Throws std::invalid_argument for the weak-filter class, which has no table.
const CountsTable& reference_table(ProjectionClass cls);
std::uint64_t reference_total(ProjectionClass cls, int n);

struct CellDiff {
  ProjectionClass cls = ProjectionClass::Projections;
  int n = 0;
  int k = 0;
  std::uint64_t expected = 0;
  std::uint64_t got = 0;
};

/// Cell-by-cell comparison over 1 <= n <= n_max, 2 <= k <= n+1.
std::vector<CellDiff> compare_counts(const CountsTable& expected, const CountsTable& got, int n_max);

/// `class<TAB>n<TAB>k<TAB>expected<TAB>got`.
std::string to_string(const CellDiff& diff);

/// Malformed catalog or counts file; `line` is 1-based, 0 if unknown.
class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCatalogHeader = "# tangle-catalog v1";

void write_catalog(std::ostream& out, std::span<const CascadeCode> codes);
/// Codes in file order. Blank lines are skipped; every code is validated.
std::vector<CascadeCode> read_catalog(std::istream& in);

/// TSV rows `class<TAB>n<TAB>k<TAB>count` after a header row.
void write_counts(std::ostream& out, const CountsTable& table);
/// One table per class, in order of first appearance.
std::vector<CountsTable> read_counts(std::istream& in);

/// One orbit per line, representative first, members separated by tabs.
void write_orbits(std::ostream& out, std::span<const CascadeCode> level, const FlypeOrbits& orbits);

/// Writes through a sibling temporary file and renames it into place, so
/// `path` either keeps its old content or holds the complete new one.
void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body);

}  // namespace tangle
