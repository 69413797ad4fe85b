// Command-line front end: certifies one prime and writes the JSON certificate.
// Exit codes: 0 PASS, 1 FAIL, 2 usage or validation error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sbcert/certificate.hpp"
#include "sbcert/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Certify a non-abelian group mu_p x| mu_3 inside A*/K* for a cyclic division algebra A"};

  std::int64_t p = 0;
  std::optional<std::int64_t> a;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::optional<std::int64_t> search_bound;
  std::string out;
  bool quiet = false;
  bool timings = false;

  app.add_option("--p", p, "prime p with p = 1 mod 3")->required();
  app.add_option("--a", a, "override the algebra parameter a (must be a non-cube mod p)");
  app.add_option("--seed", seed, "seed for the randomized identity checks");
  app.add_option("--trials", trials, "samples per randomized check")->check(CLI::PositiveNumber);
  app.add_option("--norm-search-bound", search_bound,
                 "coordinate bound for the brute-force norm search (default 1 for p = 7, 0 = skip)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", out, "write the certificate here instead of stdout");
  app.add_flag("--quiet", quiet, "suppress the summary line on stderr");
  app.add_flag("--timings", timings, "include per-stage wall-clock milliseconds in the certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  sbcert::PipelineOptions options;
  options.a = a;
  options.seed = seed;
  options.trials = trials;
  options.norm_search_bound = search_bound;

  sbcert::Certificate cert;
  try {
    cert = sbcert::run_pipeline(p, options);
  } catch (const sbcert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string json = sbcert::to_json(cert, timings);
  if (out.empty()) {
    std::cout << json;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << out << " for writing\n";
      return 2;
    }
    file << json;
  }

  if (!quiet) {
    std::cerr << "p=" << cert.p << " d=" << cert.d << " a=" << cert.a;
    if (cert.group) std::cerr << " order=" << cert.group->order;
    std::cerr << " " << (cert.pass() ? "PASS" : "FAIL");
    if (cert.failed_stage) std::cerr << " (stage " << *cert.failed_stage << ": " << *cert.failure_detail << ")";
    std::cerr << "\n";
  }
  return cert.pass() ? 0 : 1;
}
