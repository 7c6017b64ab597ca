#include "latcube/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

#include "latcube/autopar.hpp"
#include "latcube/census.hpp"
#include "latcube/cube.hpp"
#include "latcube/errors.hpp"
#include "latcube/wreath.hpp"

namespace latcube::cli {

namespace {

struct Options {
  std::uint64_t budget = kDefaultBudget;
  std::string out_path;
  bool quiet = false;
};

// Writes to --out when given, else to the command's standard output.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_act(const Options& opt, const std::string& cube_file,
            const std::string& text, std::ostream& out) {
  auto cube = load_cube(cube_file);
  auto s = parse_paratopism(text, cube.order());
  if (s.order() != cube.order())
    throw MismatchError("paratopism order " + std::to_string(s.order()) +
                        " differs from cube order " +
                        std::to_string(cube.order()));
  Sink sink(opt.out_path, out);
  write_cube(sink.get(), apply_paratopism(cube, s));
  sink.finish();
  return kOk;
}

int cmd_distance(const std::string& a, const std::string& b, std::ostream& out) {
  auto c1 = load_cube(a);
  auto c2 = load_cube(b);
  out << hamming(c1, c2) << '\n';
  return kOk;
}

int cmd_conjugate(const Options& opt, const std::string& t1,
                  const std::string& t2, std::ostream& out) {
  auto s1 = parse_paratopism(t1);
  auto s2 = parse_paratopism(t2);
  if (s1.order() != s2.order())
    throw MismatchError("paratopism orders differ");
  auto tau = conjugator(s1, s2);
  if (!tau) {
    out << "not conjugate\n";
    if (!opt.quiet) {
      out << "signature 1: " << class_signature(s1).to_string() << '\n'
          << "signature 2: " << class_signature(s2).to_string() << '\n';
    }
    return kNegative;
  }
  out << "conjugate\n";
  if (!opt.quiet) out << "witness: " << format_paratopism(*tau) << '\n';
  return kOk;
}

int cmd_canonical(const Options& opt, const std::string& text,
                  std::ostream& out) {
  auto s = parse_paratopism(text);
  auto form = canonicalize(s);
  out << "canonical: " << format_paratopism(form.canonical) << '\n';
  if (!opt.quiet) {
    out << "witness: " << format_paratopism(form.witness) << '\n'
        << "signature: " << class_signature(s).to_string() << '\n';
  }
  return kOk;
}

int cmd_is_autopar(const Options& opt, const std::string& text,
                   std::ostream& out) {
  auto s = parse_paratopism(text);
  auto result = exists_fixed_cube(s, opt.budget);
  out << to_string(result.verdict) << '\n';
  if (!opt.quiet) out << "nodes: " << result.nodes << '\n';
  switch (result.verdict) {
    case Verdict::kFound:
      if (!opt.out_path.empty()) {
        save_cube(opt.out_path, *result.cube);
        if (!opt.quiet) out << "witness: " << opt.out_path << '\n';
      } else if (!opt.quiet) {
        write_cube(out, *result.cube);
      }
      return kOk;
    case Verdict::kAbsent: return kNegative;
    case Verdict::kBudgetExhausted: return kBudget;
  }
  return kOk;
}

int cmd_census(const Options& opt, int n, std::ostream& out, std::ostream& err) {
  if (n < 1) throw ParseError("census order must be >= 1");
  auto records = run_census(n, opt.budget);
  std::string dir;
  if (!opt.out_path.empty())
    dir = std::filesystem::path(opt.out_path).parent_path().string();
  write_witnesses(records, dir);
  Sink sink(opt.out_path, out);
  write_census_csv(sink.get(), records);
  sink.finish();
  if (!opt.quiet) {
    std::size_t yes = 0, exhausted = 0;
    for (const auto& r : records) {
      yes += r.verdict == Verdict::kFound;
      exhausted += r.verdict == Verdict::kBudgetExhausted;
    }
    err << records.size() << " classes, " << yes << " autoparatopism, "
        << exhausted << " budget-exhausted\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Paratopisms of Latin cubes: action, conjugacy, autoparatopism search"};
  app.name("latcube");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--budget", opt.budget, "search node budget")
      ->capture_default_str();
  app.add_option("--out", opt.out_path, "output path");
  app.add_flag("--quiet", opt.quiet, "print verdicts only");

  std::string a, b;
  int order = 0;
  auto* act = app.add_subcommand("act", "apply a paratopism to a cube file");
  act->add_option("cube", a)->required();
  act->add_option("paratopism", b)->required();
  auto* distance = app.add_subcommand("distance", "Hamming distance of two cubes");
  distance->add_option("cube1", a)->required();
  distance->add_option("cube2", b)->required();
  auto* conj = app.add_subcommand("conjugate", "test conjugacy in S_n wr S_4");
  conj->add_option("first", a)->required();
  conj->add_option("second", b)->required();
  auto* canon = app.add_subcommand("canonical", "canonical class representative");
  canon->add_option("paratopism", a)->required();
  auto* autopar = app.add_subcommand("is-autopar", "search for a fixed cube");
  autopar->add_option("paratopism", a)->required();
  auto* census = app.add_subcommand("census", "classify all conjugacy classes");
  census->add_option("n", order)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*act) return cmd_act(opt, a, b, out);
    if (*distance) return cmd_distance(a, b, out);
    if (*conj) return cmd_conjugate(opt, a, b, out);
    if (*canon) return cmd_canonical(opt, a, out);
    if (*autopar) return cmd_is_autopar(opt, a, out);
    if (*census) return cmd_census(opt, order, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const MismatchError& e) {
    err << "mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const InvalidValue& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace latcube::cli
