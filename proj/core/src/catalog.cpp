#include "tangle/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace tangle {

namespace {

// Rows k = 2..13, columns n = 1..12.
constexpr std::int64_t kProjections[12][12] = {
    {1, 1, 2, 6, 19, 71, 293, 1348, 6568, 33701, 178706, 973085},
    {0, 1, 2, 8, 29, 138, 638, 3237, 16805, 90239, 494151, 2756453},
    {0, 0, 2, 8, 41, 210, 1125, 6138, 34112, 192278, 1096560, 6317363},
    {0, 0, 0, 5, 31, 231, 1458, 9183, 56084, 340885, 2060224, 12446400},
    {0, 0, 0, 0, 16, 161, 1406, 10572, 74331, 499902, 3276104, 21112641},
    {0, 0, 0, 0, 0, 60, 840, 8818, 75747, 591091, 4327816, 30451898},
    {0, 0, 0, 0, 0, 0, 261, 4702, 56199, 541570, 4628641, 36633417},
    {0, 0, 0, 0, 0, 0, 0, 1243, 26753, 361106, 3846580, 35758786},
    {0, 0, 0, 0, 0, 0, 0, 0, 6257, 155593, 2332512, 27199662},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 32721, 916595, 15123600},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 175760, 5464661},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 963900},
};
constexpr std::int64_t kProjectionsTotals[12] = {1, 2, 6, 27, 136, 871, 6021, 45241, 352856, 2839086, 23333649, 195201866};

constexpr std::int64_t kAlternating[12][12] = {
    {1, 1, 2, 5, 13, 36, 111, 373, 1362, 5378, 22807, 102617},
    {0, 1, 2, 7, 20, 77, 276, 1135, 4823, 21734, 101307, 488093},
    {0, 0, 2, 8, 37, 157, 687, 3052, 13981, 65797, 317506, 1565163},
    {0, 0, 0, 5, 31, 209, 1128, 5986, 30556, 155964, 795918, 4092027},
    {0, 0, 0, 0, 16, 161, 1294, 8528, 51475, 294366, 1637855, 8979493},
    {0, 0, 0, 0, 0, 60, 840, 8206, 62895, 428254, 2702902, 16313106},
    {0, 0, 0, 0, 0, 0, 261, 4702, 52815, 460189, 3475551, 23979733},
    {0, 0, 0, 0, 0, 0, 0, 1243, 26753, 341878, 3327424, 27625056},
    {0, 0, 0, 0, 0, 0, 0, 0, 6257, 155593, 2221544, 23869621},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 32721, 916595, 14473275},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 175760, 5464661},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 963900},
};
constexpr std::int64_t kAlternatingTotals[12] = {1, 2, 6, 25, 117, 700, 4597, 33225, 250917, 1961874, 15695169, 127916745};

constexpr std::int64_t kReduced[12][12] = {
    {1, 0, 0, 0, 1, 1, 3, 9, 26, 74, 238, 770},
    {0, 1, 1, 1, 1, 4, 7, 24, 69, 226, 719, 2423},
    {0, 0, 2, 2, 4, 7, 21, 58, 185, 596, 1998, 6753},
    {0, 0, 0, 5, 9, 22, 49, 152, 458, 1545, 5188, 17990},
    {0, 0, 0, 0, 16, 42, 126, 355, 1144, 3769, 13012, 45515},
    {0, 0, 0, 0, 0, 60, 228, 799, 2586, 8850, 30754, 109843},
    {0, 0, 0, 0, 0, 0, 261, 1288, 5164, 18745, 68142, 248891},
    {0, 0, 0, 0, 0, 0, 0, 1243, 7525, 33856, 134834, 520884},
    {0, 0, 0, 0, 0, 0, 0, 0, 6257, 44482, 222482, 962620},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 32721, 266270, 1464500},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 175760, 1607405},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 963900},
};
constexpr std::int64_t kReducedTotals[12] = {1, 1, 3, 8, 31, 136, 695, 3928, 23414, 144864, 919397, 5951494};
CountsTable build(ProjectionClass cls, const std::int64_t (&rows)[12][12]) {
  CountsTable t{cls, {}};
  for (int n = 1; n <= kReferenceMaxN; ++n)
    for (int k = 2; k <= n + 1; ++k) t.cells[{n, k}] = static_cast<std::uint64_t>(rows[k - 2][n - 1]);
  return t;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::uint64_t parse_count(const std::string& field, int line) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (field.empty() || used != field.size() || field[0] == '-')
    throw FormatError(line, "line " + std::to_string(line) + ": bad number '" + field + "'");
  return v;
}

}  // namespace

const CountsTable& reference_table(ProjectionClass cls) {
  static const CountsTable projections = build(ProjectionClass::Projections, kProjections);
  static const CountsTable alternating = build(ProjectionClass::Alternating, kAlternating);
  static const CountsTable reduced = build(ProjectionClass::Reduced, kReduced);
  switch (cls) {
    case ProjectionClass::Projections: return projections;
    case ProjectionClass::Alternating: return alternating;
    case ProjectionClass::Reduced: return reduced;
    case ProjectionClass::WeakFiltered: break;
  }
  throw std::invalid_argument("no published table for class '" + std::string(class_name(cls)) + "'");
}

std::uint64_t reference_total(ProjectionClass cls, int n) {
  if (n < 1 || n > kReferenceMaxN) throw std::out_of_range("n outside the published range");
  switch (cls) {
    case ProjectionClass::Projections: return kProjectionsTotals[n - 1];
    case ProjectionClass::Alternating: return kAlternatingTotals[n - 1];
    case ProjectionClass::Reduced: return kReducedTotals[n - 1];
    case ProjectionClass::WeakFiltered: break;
  }
  throw std::invalid_argument("no published table for class '" + std::string(class_name(cls)) + "'");
}

std::vector<CellDiff> compare_counts(const CountsTable& expected, const CountsTable& got, int n_max) {
  std::vector<CellDiff> diffs;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 2; k <= n + 1; ++k)
      if (expected.at(n, k) != got.at(n, k)) diffs.push_back({expected.cls, n, k, expected.at(n, k), got.at(n, k)});
  return diffs;
}

std::string to_string(const CellDiff& d) {
  std::ostringstream os;
  os << class_name(d.cls) << '\t' << d.n << '\t' << d.k << '\t' << d.expected << '\t' << d.got;
  return os.str();
}

void write_catalog(std::ostream& out, std::span<const CascadeCode> codes) {
  out << kCatalogHeader << '\n';
  for (const CascadeCode& c : codes) out << to_string(c) << '\n';
}

std::vector<CascadeCode> read_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCatalogHeader)
    throw FormatError(1, "missing catalog header '" + std::string(kCatalogHeader) + "'");
  std::vector<CascadeCode> codes;
  for (int number = 2; std::getline(in, line); ++number) {
    line = trim(line);
    if (line.empty()) continue;
    try {
      CascadeCode c = parse_code(line);
      validate(c);
      codes.push_back(std::move(c));
    } catch (const CodeError& e) {
      throw FormatError(number, "line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("read error in catalog");
  return codes;
}

void write_counts(std::ostream& out, const CountsTable& table) {
  out << "class\tn\tk\tcount\n";
  for (const auto& [cell, count] : table.cells)
    out << class_name(table.cls) << '\t' << cell.first << '\t' << cell.second << '\t' << count << '\n';
}

std::vector<CountsTable> read_counts(std::istream& in) {
  std::vector<CountsTable> tables;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    line = trim(line);
    if (line.empty() || line.rfind("class\t", 0) == 0) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    for (std::string f; std::getline(row, f, '\t');) fields.push_back(trim(f));
    if (fields.size() != 4) throw FormatError(number, "line " + std::to_string(number) + ": expected 4 fields");
    ProjectionClass cls;
    try {
      cls = parse_class(fields[0]);
    } catch (const std::invalid_argument& e) {
      throw FormatError(number, "line " + std::to_string(number) + ": " + e.what());
    }
    const auto n = static_cast<int>(parse_count(fields[1], number));
    const auto k = static_cast<int>(parse_count(fields[2], number));
    const std::uint64_t count = parse_count(fields[3], number);
    auto it = std::find_if(tables.begin(), tables.end(), [&](const CountsTable& t) { return t.cls == cls; });
    if (it == tables.end()) it = tables.insert(tables.end(), CountsTable{cls, {}});
    it->add(n, k, count);
  }
  if (in.bad()) throw IoError("read error in counts file");
  return tables;
}

void write_orbits(std::ostream& out, std::span<const CascadeCode> level, const FlypeOrbits& orbits) {
  for (const auto& orbit : orbits.orbits) {
    for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? "\t" : "") << to_string(level[orbit[i]]);
    out << '\n';
  }
}

void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + temp.string() + " for writing");
    body(out);
    out.flush();
    if (!out) throw IoError("write failed for " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoError("cannot move " + temp.string() + " to " + path.string());
  }
}

}  // namespace tangle
