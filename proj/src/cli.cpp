#include "skolem/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skolem/construction.hpp"
#include "skolem/format.hpp"
#include "skolem/search.hpp"

namespace skolem::cli {
namespace {

using nlohmann::json;

json envelope(const std::string& command, json parameters, json results) {
  return {{"schema", kSchema},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"results", std::move(results)}};
}

json certificate_json(const HalfSetCertificate& c) {
  json diffs = json::array();
  for (const auto& e : c.entries) diffs.push_back(e.difference);
  json out = {{"valid", c.valid}, {"differences", std::move(diffs)}};
  if (!c.valid) out["failure"] = c.failure;
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct GenerateArgs {
  std::uint64_t q = 0;
  std::string beta;
  std::optional<std::uint64_t> alpha;
  std::string format = "text";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<BetaChoice> choice;
  std::uint64_t beta = 0;
  if (a.beta == "2") {
    choice = BetaChoice::Two;
  } else if (a.beta == "half") {
    choice = BetaChoice::Half;
  } else {
    try {
      std::size_t used = 0;
      beta = std::stoull(a.beta, &used);
      if (used != a.beta.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: --beta must be 2, half or a positive integer, got '" << a.beta << "'\n";
      return kUsage;
    }
  }

  std::optional<PairSet> starter;
  std::uint64_t alpha = 0;
  try {
    if (choice) {
      if (a.alpha) {
        alpha = *a.alpha;
      } else {
        const Modulus m(a.q);
        if (m.is_prime()) alpha = build_qr_table(m).smallest_generator().value();
      }
      starter = build_strong_skolem(a.q, *choice, a.alpha ? a.alpha : std::optional(alpha));
      beta = beta_value(a.q, *choice);
    } else {
      const Modulus m(a.q);
      if (!m.is_prime()) throw PreconditionError("q = " + std::to_string(a.q) + " is not prime");
      alpha = a.alpha ? *a.alpha : build_qr_table(m).smallest_generator().value();
      starter = build_s_beta(ConstructionParams::make(a.q, alpha, beta));
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const VerificationReport report = full_report(*starter);
  const HalfSetCertificate cert = half_set_certificate(*starter);
  const bool verified = choice ? report.strong_skolem() : report.is_starter && report.is_strong;

  if (a.format == "json") {
    json params = {{"q", a.q},
                   {"alpha", alpha},
                   {"beta", beta},
                   {"beta_choice", choice ? to_string(*choice) : "explicit"}};
    json results = {{"starter", to_json(*starter)},
                    {"report", to_json(report)},
                    {"half_set_certificate", certificate_json(cert)}};
    out << envelope("generate", std::move(params), std::move(results)).dump(2) << '\n';
  } else {
    out << "# generate q=" << a.q << " alpha=" << alpha << " beta=" << beta << '\n'
        << to_text(*starter) << report_text(report)
        << "# half-set certificate: " << (cert.valid ? "valid" : cert.failure) << '\n';
  }
  if (!verified) {
    err << "error: constructed starter failed verification (this is a bug)\n";
    return kInternalFailure;
  }
  return kOk;
}

struct VerifyArgs {
  std::string input = "-";
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string body;
  if (a.input == "-") {
    body.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(a.input, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << a.input << '\n';
      return kUsage;
    }
    body.assign(std::istreambuf_iterator<char>(file), {});
  }

  std::optional<PairSet> s;
  try {
    s = parse_auto(body);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const VerificationReport report = full_report(*s);
  if (a.format == "json") {
    json results = {{"starter", to_json(*s)}, {"report", to_json(report)}};
    out << envelope("verify", {{"input", a.input}}, std::move(results)).dump(2) << '\n';
  } else {
    out << to_text(*s) << report_text(report);
  }
  return report.strong_skolem() ? kOk : kPropertyFailure;
}

struct SearchArgs {
  std::uint32_t n = 0;
  bool strong = false;
  bool count = false;
  bool first = false;
  bool enumerate = false;
  std::optional<std::size_t> limit;
  bool override_ceiling = false;
  unsigned threads = 1;
  std::string format = "text";
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.n = a.n;
  cfg.mode = a.enumerate ? SearchMode::EnumerateAll
             : a.first   ? SearchMode::FirstWitness
                         : SearchMode::CountAll;
  cfg.limit = a.limit;
  cfg.require_strong = a.strong;
  cfg.threads = a.threads;
  cfg.override_ceiling = a.override_ceiling;
  if (const char* env = std::getenv(kCeilingEnv); env != nullptr && *env != '\0') {
    try {
      cfg.ceiling = static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception&) {
      err << "error: " << kCeilingEnv << " must be a positive integer, got '" << env << "'\n";
      return kUsage;
    }
  }

  const bool text = a.format != "json";
  const std::string mode = a.enumerate ? "enumerate" : a.first ? "first" : "count";
  if (text) {
    out << "# search n=" << a.n << " mode=" << mode << " strong=" << yes_no(a.strong) << '\n';
  }
  WitnessSink sink;
  if (text) {
    sink = [&out](const PairSet& w) { out << to_text(w) << std::flush; };
  }

  SearchResult r;
  try {
    r = search_skolem_starters(cfg, sink);
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCeiling;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const double ms = std::chrono::duration<double, std::milli>(r.wall_time).count();
  if (text) {
    if (cfg.mode == SearchMode::CountAll) {
      for (const PairSet& w : r.witnesses) out << to_text(w);
    }
    out << "# count: " << r.count << '\n'
        << "# nodes explored: " << r.nodes_explored << '\n'
        << "# wall time ms: " << ms << '\n';
  } else {
    json witnesses = json::array();
    for (const PairSet& w : r.witnesses) witnesses.push_back(to_json(w));
    json params = {{"n", a.n},
                   {"mode", mode},
                   {"strong", a.strong},
                   {"limit", a.limit ? json(*a.limit) : json(nullptr)},
                   {"threads", a.threads}};
    json results = {{"n", r.n},
                    {"count", r.count},
                    {"witnesses", std::move(witnesses)},
                    {"nodes_explored", r.nodes_explored},
                    {"wall_time_ms", ms}};
    out << envelope("search", std::move(params), std::move(results)).dump(2) << '\n';
  }
  return kOk;
}

struct TabulateArgs {
  std::uint64_t q_max = 0;
  unsigned threads = 1;
  std::string format = "text";
};

int cmd_tabulate(const TabulateArgs& a, std::ostream& out) {
  const auto rows = enumerate_theorem_starters(a.q_max, a.threads);
  if (a.format == "json") {
    json table = json::array();
    for (const auto& r : rows) {
      const VerificationReport rep = full_report(r.starter);
      table.push_back({{"q", r.q},
                       {"beta_choice", to_string(r.beta_choice)},
                       {"beta", beta_value(r.q, r.beta_choice)},
                       {"alpha", r.alpha},
                       {"starter", to_json(r.starter)},
                       {"is_starter", rep.is_starter},
                       {"is_strong", rep.is_strong},
                       {"is_skolem", rep.is_skolem},
                       {"half_set_certificate", certificate_json(half_set_certificate(r.starter))}});
    }
    out << envelope("tabulate", {{"q_max", a.q_max}}, {{"rows", std::move(table)}}).dump(2) << '\n';
    return kOk;
  }

  out << "# tabulate q_max=" << a.q_max << " rows=" << rows.size() << '\n';
  for (const auto& r : rows) {
    const VerificationReport rep = full_report(r.starter);
    const HalfSetCertificate cert = half_set_certificate(r.starter);
    out << "# q=" << r.q << " beta=" << beta_value(r.q, r.beta_choice) << " alpha=" << r.alpha
        << " starter=" << yes_no(rep.is_starter) << " strong=" << yes_no(rep.is_strong)
        << " skolem=" << yes_no(rep.is_skolem) << " half_set="
        << (cert.valid ? "1.." + std::to_string((r.q - 1) / 2) : "FAIL") << '\n'
        << to_text(r.starter);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Strong Skolem starters: construct, verify, search, tabulate", "skolem"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build S_beta over Z_q and verify it");
  generate->add_option("--q", gen.q, "Prime modulus")->required();
  generate->add_option("--beta", gen.beta, "2, half, or an explicit non-residue")->required();
  generate->add_option("--alpha", gen.alpha, "Generator of QR(q); defaults to the smallest");
  generate->add_option("--format", gen.format)->check(formats);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check starter, strong and Skolem properties");
  verify->add_option("input", ver.input, "Pair-set file, text or JSON ('-' for stdin)");
  verify->add_option("--format", ver.format)->check(formats);

  SearchArgs sea;
  auto* search = app.add_subcommand("search", "Exhaustive backtracking over Skolem starters");
  search->add_option("--n", sea.n, "Order of Z_n")->required();
  search->add_flag("--strong", sea.strong, "Only strong Skolem starters");
  auto* count = search->add_flag("--count", sea.count, "Exact count (default)");
  auto* first = search->add_flag("--first", sea.first, "Stop at the first witness");
  auto* enumerate = search->add_flag("--enumerate", sea.enumerate, "Stream every witness");
  count->excludes(first)->excludes(enumerate);
  first->excludes(enumerate);
  search->add_option("--limit", sea.limit, "Cap on emitted witnesses")->check(CLI::PositiveNumber);
  search->add_flag("--override", sea.override_ceiling, "Search beyond the tractability ceiling");
  search->add_option("--threads", sea.threads, "Parallel workers")->check(CLI::PositiveNumber);
  search->add_option("--format", sea.format)->check(formats);

  TabulateArgs tab;
  auto* tabulate = app.add_subcommand("tabulate", "Both constructions for every admissible prime");
  tabulate->add_option("--q-max", tab.q_max, "Upper bound on q")->required();
  tabulate->add_option("--threads", tab.threads)->check(CLI::PositiveNumber);
  tabulate->add_option("--format", tab.format)->check(formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out, err);
    if (verify->parsed()) return cmd_verify(ver, in, out, err);
    if (search->parsed()) return cmd_search(sea, out, err);
    return cmd_tabulate(tab, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
}

}  // namespace skolem::cli
