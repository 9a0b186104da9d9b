#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "b0/corpus.hpp"
#include "b0/report.hpp"

namespace {

// 0 success, 1 I/O, 2 parse/validate, 3 pipeline assertion, 4 corpus mismatch
enum ExitCode { kOk = 0, kIo = 1, kParse = 2, kPipeline = 3, kMismatch = 4 };

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kIo, "cannot open " + path};
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw CliError{kIo, "cannot read " + path};
  return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError{kIo, "cannot open " + out_path + " for writing"};
  out << text;
  if (!out.flush()) throw CliError{kIo, "cannot write " + out_path};
}

b0::CommutingMode parse_mode(const std::string& s) {
  if (s == "default") return b0::CommutingMode::Default;
  if (s == "oracle-all-pairs") return b0::CommutingMode::AllPairs;
  throw CliError{kParse, "unknown mode: " + s +
                             " (expected default or oracle-all-pairs)"};
}

// Resolves the subcommand input: exactly one of a file path or --family.
struct Input {
  b0::PcPresentation presentation;
  std::optional<int> family;
};

Input resolve_input(const std::string& file, int family) {
  if (file.empty() == (family == 0))
    throw CliError{kParse, "need exactly one input: a file or --family N"};
  Input in;
  if (family != 0) {
    if (family < 1 || family > static_cast<int>(b0::corpus().size()))
      throw CliError{kParse, "family out of range: " + std::to_string(family)};
    in.presentation = b0::corpus_entry(family).presentation;
    in.family = family;
    return in;
  }
  std::string text = read_file(file);
  try {
    in.presentation = b0::parse_presentation(text);
    b0::check_well_formed(in.presentation);
  } catch (const b0::ParseError& e) {
    throw CliError{kParse, file + ": " + e.what()};
  } catch (const std::invalid_argument& e) {
    throw CliError{kParse, file + ": " + e.what()};
  }
  return in;
}

int cmd_check(const std::string& file, b0::ReportFormat format,
              const std::string& out_path) {
  Input in = resolve_input(file, 0);
  const b0::PcPresentation& p = in.presentation;
  b0::ValidationReport report = b0::validate(p);
  std::ostringstream os;
  if (format == b0::ReportFormat::Json) {
    nlohmann::json j;
    j["name"] = p.name;
    j["n"] = p.n;
    j["order"] = p.order().get_str();
    j["ok"] = report.ok;
    nlohmann::json fails = nlohmann::json::array();
    for (const b0::ValidationFailure& f : report.failures)
      fails.push_back({{"check", b0::describe(f.check, p)},
                       {"lhs", b0::element_to_string(f.lhs)},
                       {"rhs", b0::element_to_string(f.rhs)}});
    j["failures"] = std::move(fails);
    os << j.dump(2) << '\n';
  } else if (format == b0::ReportFormat::Csv) {
    os << "name,n,order,ok\n"
       << p.name << ',' << p.n << ',' << p.order().get_str() << ','
       << (report.ok ? "1" : "0") << '\n';
  } else {
    if (report.ok) {
      os << "OK: consistent pc presentation on " << p.n
         << " generators, order " << p.order().get_str() << '\n';
    } else {
      os << "INCONSISTENT: " << report.failures.size()
         << " overlap checks fail\n";
      for (const b0::ValidationFailure& f : report.failures)
        os << "  " << b0::describe(f.check, p) << ": "
           << b0::element_to_string(f.lhs) << " vs "
           << b0::element_to_string(f.rhs) << '\n';
    }
  }
  write_output(os.str(), out_path);
  return report.ok ? kOk : kParse;
}

int cmd_b0(const std::string& file, int family, const std::string& mode,
           int max_word_len, b0::ReportFormat format,
           const std::string& out_path) {
  Input in = resolve_input(file, family);
  b0::PipelineOptions options{parse_mode(mode)};
  b0::GroupReport report = b0::build_report(in.presentation, options,
                                            max_word_len);
  report.family = in.family;
  write_output(b0::render(report, format), out_path);
  return kOk;
}

int cmd_schur(const std::string& file, int family, b0::ReportFormat format,
              const std::string& out_path) {
  Input in = resolve_input(file, family);
  b0::SchurReport report = b0::build_schur_report(in.presentation);
  report.family = in.family;
  write_output(b0::render(report, format), out_path);
  return kOk;
}

int cmd_corpus(const std::string& mode, b0::ReportFormat format,
               const std::string& out_path) {
  b0::CorpusRunResult result = b0::run_corpus(parse_mode(mode));
  write_output(b0::render(result, format), out_path);
  if (!result.all_match) {
    std::ostringstream os;
    for (const auto& row : result.rows)
      if (!row.match) os << ' ' << row.family;
    std::cerr << "mismatching families:" << os.str() << '\n';
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bogomolov multipliers, Schur multipliers and "
               "commutativity-preserving extensions of pc groups"};
  app.require_subcommand(1);

  std::string format = "text", mode = "default", out_path;
  std::string check_file, b0_file, schur_file;
  int b0_family = 0, schur_family = 0, max_word_len = 4;

  app.add_option("--format", format, "Output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  CLI::App* check = app.add_subcommand(
      "check", "Parse a presentation file and run every overlap check");
  check->fallthrough();
  check->add_option("file", check_file, "Presentation file")->required();

  CLI::App* b0cmd = app.add_subcommand(
      "b0", "Bogomolov multiplier, CP extension and commutator words");
  b0cmd->fallthrough();
  b0cmd->add_option("file", b0_file, "Presentation file");
  b0cmd->add_option("--family", b0_family, "Bundled family number (1-115)");
  b0cmd->add_option("--mode", mode,
                    "Commuting-pair scan: default or oracle-all-pairs")
      ->capture_default_str();
  b0cmd->add_option("--max-word-len", max_word_len,
                    "Commutator word search depth")
      ->capture_default_str();

  CLI::App* schur = app.add_subcommand(
      "schur", "Schur multiplier from the fully tailed presentation");
  schur->fallthrough();
  schur->add_option("file", schur_file, "Presentation file");
  schur->add_option("--family", schur_family, "Bundled family number (1-115)");

  CLI::App* corpus = app.add_subcommand(
      "corpus", "Run every bundled family and compare with the tables");
  corpus->fallthrough();
  corpus->add_option("--mode", mode,
                     "Commuting-pair scan: default or oracle-all-pairs")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    b0::ReportFormat rf = b0::parse_report_format(format);
    if (app.got_subcommand(check)) return cmd_check(check_file, rf, out_path);
    if (app.got_subcommand(b0cmd))
      return cmd_b0(b0_file, b0_family, mode, max_word_len, rf, out_path);
    if (app.got_subcommand(schur))
      return cmd_schur(schur_file, schur_family, rf, out_path);
    return cmd_corpus(mode, rf, out_path);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const b0::InconsistentPresentation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const b0::FreeRankMismatch& e) {
    std::cerr << "pipeline error: " << e.what() << '\n';
    return kPipeline;
  } catch (const b0::WordNotFound& e) {
    std::cerr << "pipeline error: " << e.what() << '\n';
    return kPipeline;
  } catch (const std::exception& e) {
    std::cerr << "pipeline error: " << e.what() << '\n';
    return kPipeline;
  }
}
