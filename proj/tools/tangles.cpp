#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tangle/canonical.hpp"
#include "tangle/catalog.hpp"
#include "tangle/enumerate.hpp"
#include "tangle/flype.hpp"
#include "tangle/render.hpp"

namespace fs = std::filesystem;
using namespace tangle;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kIo = 3 };

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<ProjectionClass> parse_classes(const std::vector<std::string>& names) {
  std::vector<ProjectionClass> out;
  for (const auto& name : names) {
    const ProjectionClass c = parse_class(name);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

bool wants(const std::vector<ProjectionClass>& classes, ProjectionClass c) {
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

CascadeCode read_code(const std::string& text) {
  CascadeCode code = parse_code(text);
  validate(code);
  return code;
}

CascadeCode canonical_of(const CascadeCode& code) {
  const PlanarMap map = expand(code);
  if (!is_connected(map)) throw InputError("projection of " + to_string(code) + " is not connected");
  if (is_composite(map)) throw InputError("projection of " + to_string(code) + " is composite");
  return canonical_code(map);
}

fs::path level_path(const fs::path& dir, int n) {
  char name[32];
  std::snprintf(name, sizeof name, "level-%02d.cat", n);
  return dir / name;
}

fs::path orbit_path(const fs::path& dir, int n) {
  char name[32];
  std::snprintf(name, sizeof name, "orbits-%02d.txt", n);
  return dir / name;
}

std::vector<CascadeCode> load_level(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_catalog(in);
}

void merge(CountsTable& into, const CountsTable& from) {
  for (const auto& [cell, count] : from.cells) into.add(cell.first, cell.second, count);
}

struct Tables {
  CountsTable projections{ProjectionClass::Projections, {}};
  CountsTable alternating{ProjectionClass::Alternating, {}};
  CountsTable reduced{ProjectionClass::Reduced, {}};
  CountsTable weak{ProjectionClass::WeakFiltered, {}};
  std::uint64_t flype_violations = 0;

  const CountsTable& of(ProjectionClass c) const {
    switch (c) {
      case ProjectionClass::Projections: return projections;
      case ProjectionClass::Alternating: return alternating;
      case ProjectionClass::Reduced: return reduced;
      case ProjectionClass::WeakFiltered: return weak;
    }
    return projections;
  }

  void absorb(const EnumerationResult& r) {
    merge(projections, r.projections);
    merge(reduced, r.reduced);
    merge(weak, r.weak);
  }
};

struct RunOptions {
  int max_n = 1;
  std::vector<ProjectionClass> classes;
  std::optional<fs::path> out;
  int workers = 1;
  bool resume = false;
  bool quiet = false;
};

/// Runs the enumeration, writing level, orbit and counts files when `out`
/// is set.
Tables run(const RunOptions& o) {
  Tables tables;
  const bool alt = wants(o.classes, ProjectionClass::Alternating);
  if (o.out) fs::create_directories(*o.out);

  auto on_level = [&](int n, const std::vector<CascadeCode>& level, bool fresh) {
    if (o.out && fresh)
      write_file_atomically(level_path(*o.out, n), [&](std::ostream& os) { write_catalog(os, level); });
    if (alt) {
      const FlypeOrbits orbits = flype_orbits(n, level);
      merge(tables.alternating, orbits.counts);
      tables.flype_violations += orbits.violations;
      if (o.out)
        write_file_atomically(orbit_path(*o.out, n), [&](std::ostream& os) { write_orbits(os, level, orbits); });
    }
    if (!o.quiet) std::cerr << "n=" << n << " codes=" << level.size() << (fresh ? "" : " (resumed)") << std::endl;
  };

  int done = 0;
  std::vector<CascadeCode> last;
  if (o.resume) {
    if (!o.out) throw InputError("--resume needs --out");
    while (done < o.max_n && fs::exists(level_path(*o.out, done + 1))) {
      std::vector<CascadeCode> level = load_level(level_path(*o.out, done + 1));
      ++done;
      for (const CascadeCode& c : level)
        if (c.crossings() != done) throw FormatError(0, level_path(*o.out, done).string() + ": wrong crossing count");
      on_level(done, level, false);
      if (done < o.max_n && fs::exists(level_path(*o.out, done + 1))) {
        EnumerationResult r;
        tally_level(r, done, level);
        tables.absorb(r);
      } else {
        last = std::move(level);
      }
    }
  }

  const EnumerateOptions eo{o.max_n, o.workers, false};
  auto sink = [&](int n, const std::vector<CascadeCode>& level) { on_level(n, level, true); };
  if (done == 0)
    tables.absorb(enumerate_all(eo, sink));
  else
    tables.absorb(enumerate_from(done, std::move(last), eo, sink));

  if (o.out)
    write_file_atomically(*o.out / "counts.tsv", [&](std::ostream& os) {
      for (ProjectionClass c : o.classes) write_counts(os, tables.of(c));
    });
  return tables;
}

std::string totals_line(const CountsTable& t, int max_n, std::optional<int> legs) {
  std::string line;
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) line += ' ';
    line += std::to_string(legs ? t.at(n, *legs) : t.total(n));
  }
  return line;
}

int cmd_enumerate(const RunOptions& o, std::optional<int> legs) {
  const Tables tables = run(o);
  for (ProjectionClass c : o.classes) {
    if (o.classes.size() > 1) std::cout << class_name(c) << ": ";
    std::cout << totals_line(tables.of(c), o.max_n, legs) << '\n';
  }
  if (tables.flype_violations) {
    std::cerr << "flype moves violating (n, k) or primality: " << tables.flype_violations << '\n';
    return kMismatch;
  }
  return kOk;
}

int cmd_verify(RunOptions o, const std::optional<fs::path>& counts) {
  if (o.max_n > kReferenceMaxN)
    throw InputError("published tables stop at n = " + std::to_string(kReferenceMaxN));
  if (wants(o.classes, ProjectionClass::WeakFiltered)) throw InputError("no published table for class 'weakfilter'");

  std::vector<CountsTable> given;
  if (counts) {
    std::ifstream in(*counts);
    if (!in) throw IoError("cannot open " + counts->string());
    given = read_counts(in);
  }
  auto from_file = [&](ProjectionClass c) -> const CountsTable* {
    for (const auto& t : given)
      if (t.cls == c) return &t;
    return nullptr;
  };

  std::vector<ProjectionClass> missing;
  for (ProjectionClass c : o.classes)
    if (!from_file(c)) missing.push_back(c);
  Tables computed;
  if (!missing.empty()) {
    RunOptions r = o;
    r.classes = missing;
    r.out.reset();
    r.resume = false;
    computed = run(r);
  }

  std::size_t mismatches = 0;
  for (ProjectionClass c : o.classes) {
    const CountsTable* got = from_file(c);
    if (!got) got = &computed.of(c);
    const auto diffs = compare_counts(reference_table(c), *got, o.max_n);
    for (const CellDiff& d : diffs) std::cout << "mismatch\t" << to_string(d) << '\n';
    std::size_t cells = 0;
    for (int n = 1; n <= o.max_n; ++n) cells += static_cast<std::size_t>(n);
    std::cout << class_name(c) << ": " << cells - diffs.size() << '/' << cells << " cells match up to n = " << o.max_n
              << '\n';
    mismatches += diffs.size();
  }
  return mismatches ? kMismatch : kOk;
}

int cmd_render(const std::string& text, const std::string& style, const std::optional<fs::path>& out) {
  const RenderStyle s = parse_style(style);
  const std::string svg = render_svg(read_code(text), s);
  if (out)
    write_file_atomically(*out, [&](std::ostream& os) { os << svg; });
  else
    std::cout << svg;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, verify and draw prime tangle projections"};
  app.require_subcommand(1);

  RunOptions run_opts;
  std::vector<std::string> class_names{"proj"};
  std::optional<int> legs;
  std::string out_dir;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate canonical codes level by level");
  enumerate->add_option("--max-n", run_opts.max_n, "Largest crossing number")->required()->check(CLI::Range(1, 31));
  enumerate->add_option("--class", class_names, "proj, alt, reduced or weakfilter (repeatable)");
  enumerate->add_option("--legs", legs, "Report totals for this k only")->check(CLI::PositiveNumber);
  enumerate->add_option("--out", out_dir, "Directory for level catalogs, orbit dumps and counts.tsv");
  enumerate->add_option("--workers", run_opts.workers, "Worker threads")->check(CLI::Range(1, 1024));
  enumerate->add_flag("--resume", run_opts.resume, "Continue from level files already in --out");
  enumerate->add_flag("--quiet", run_opts.quiet, "No progress output");

  int verify_max_n = 7;
  std::vector<std::string> verify_classes{"proj", "alt", "reduced"};
  std::string counts_path;
  int verify_workers = 1;
  auto* verify = app.add_subcommand("verify", "Compare counts with the published tables");
  verify->add_option("--max-n", verify_max_n, "Largest crossing number")->check(CLI::Range(1, 31));
  verify->add_option("--class", verify_classes, "proj, alt or reduced (repeatable)");
  verify->add_option("--counts", counts_path, "Counts TSV to check instead of enumerating");
  verify->add_option("--workers", verify_workers, "Worker threads")->check(CLI::Range(1, 1024));

  std::string code_text;
  std::string style = "cascade";
  std::string render_out;
  auto* render = app.add_subcommand("render", "Draw a cascade code as SVG");
  render->add_option("code", code_text, "Cascade code, e.g. \"3;X 0;P 1\"")->required();
  render->add_option("--style", style, "cascade or disk")->check(CLI::IsMember({"cascade", "disk"}));
  render->add_option("--out", render_out, "Output file (default: stdout)");

  auto add_code_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("code", code_text, "Cascade code")->required();
    return sub;
  };
  auto* canonicalize = add_code_command("canonicalize", "Print the canonical code of the projection");
  auto* rootcode = add_code_command("rootcode", "Print the invariant root code");
  auto* expand_cmd = add_code_command("expand", "Print the planar map of a code");
  auto* flype = add_code_command("flype-class", "Print every canonical code reachable by flypes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kInvalid;
  }

  try {
    if (*enumerate) {
      run_opts.classes = parse_classes(class_names);
      if (!out_dir.empty()) run_opts.out = out_dir;
      return cmd_enumerate(run_opts, legs);
    }
    if (*verify) {
      RunOptions o;
      o.max_n = verify_max_n;
      o.classes = parse_classes(verify_classes);
      o.workers = verify_workers;
      o.quiet = true;
      return cmd_verify(o, counts_path.empty() ? std::nullopt : std::optional<fs::path>(counts_path));
    }
    if (*render) return cmd_render(code_text, style, render_out.empty() ? std::nullopt : std::optional<fs::path>(render_out));
    if (*canonicalize) {
      std::cout << to_string(canonical_of(read_code(code_text))) << '\n';
    } else if (*rootcode) {
      std::cout << to_string(invariant_root_code(expand(read_code(code_text))).code) << '\n';
    } else if (*expand_cmd) {
      std::cout << expand(read_code(code_text)).serialize();
    } else if (*flype) {
      for (const CascadeCode& c : flype_class(canonical_of(read_code(code_text)))) std::cout << to_string(c) << '\n';
    }
    return kOk;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
