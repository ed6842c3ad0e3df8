#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "vmlattice/io.hpp"
#include "vmlattice/parallel.hpp"
#include "vmlattice/rules.hpp"
#include "vmlattice/search.hpp"
#include "vmlattice/wce.hpp"

namespace vmlattice::cli {

std::vector<Integer> parse_integer_list(const std::string& spec) {
  return expand_list(spec, [](Integer) { return true; });
}

std::vector<double> parse_real_list(const std::string& spec) {
  std::vector<double> values;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError("not a number: '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw DomainError("empty list");
  return values;
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Options {
  std::string n;
  std::string z;
  std::string gamma = "1";
  std::string scheme = "optimal";
  std::string format = "csv";
  std::string output;
  std::string k;
  int s = 0;
  bool full = false;
  unsigned jobs = 0;
};

unsigned resolve_jobs(unsigned flag) {
  if (const char* env = std::getenv("VMLATTICE_JOBS"); env != nullptr && *env != '\0') {
    const Integer v = detail::parse_integer(env);
    if (v < 1) throw DomainError("VMLATTICE_JOBS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return flag > 0 ? flag : default_jobs();
}

ProductWeights weights_for(const std::string& spec, Eigen::Index s) {
  const auto values = parse_real_list(spec);
  if (values.size() == 1) return ProductWeights::constant(s, values.front());
  if (static_cast<Eigen::Index>(values.size()) != s) {
    throw DimensionError("--gamma has " + std::to_string(values.size()) + " entries for s = " + std::to_string(s));
  }
  return ProductWeights(Eigen::Map<const Eigen::VectorXd>(values.data(), s));
}

LatticeRule lattice_from(const Options& o) {
  if (o.n.empty() || o.z.empty()) throw DomainError("--N and --z are required");
  const Integer n = detail::parse_integer(o.n);
  const auto z = parse_integer_list(o.z);
  if (o.s != 0 && static_cast<std::size_t>(o.s) != z.size()) {
    throw DimensionError("--s " + std::to_string(o.s) + " does not match " + std::to_string(z.size()) +
                         " generator components");
  }
  IntegerVector zv(static_cast<Eigen::Index>(z.size()));
  for (std::size_t j = 0; j < z.size(); ++j) zv(static_cast<Eigen::Index>(j)) = z[j];
  return LatticeRule(zv, Modulus(n));
}

std::string join_generator(const LatticeRule& rule) {
  std::string s;
  for (Eigen::Index j = 0; j < rule.dimension(); ++j) {
    if (j > 0) s += ';';
    s += std::to_string(rule.generator(j));
  }
  return s;
}

void require_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw DomainError("--format must be csv or json");
}

std::vector<Integer> prime_list(const std::string& spec) {
  auto primes = expand_list(spec, [](Integer v) { return is_prime(v) && v >= 3; });
  if (primes.empty()) throw DomainError("no primes in '" + spec + "'");
  for (auto p : primes) {
    if (!is_prime(p) || p < 3) throw NotPrime(std::to_string(p) + " is not an odd prime");
  }
  return primes;
}

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-300;
}

int cmd_weights(const Options& o, std::ostream& out) {
  require_format(o);
  const LatticeRule rule = lattice_from(o);
  const Scheme scheme = parse_scheme(o.scheme);
  const VertexWeights w = scheme_vertex_weights(rule, scheme);
  if (o.format == "json") {
    out << rule_to_json(rule, scheme, w).dump(2) << '\n';
    return kExitOk;
  }
  for (Eigen::Index j = 0; j < rule.dimension(); ++j) out << 'a' << (j + 1) << ',';
  out << "w\n";
  for (unsigned c = 0; c < w.corner_count(); ++c) {
    for (int a : VertexWeights::corner_coordinates(c, rule.dimension())) out << a << ',';
    out << format_value(w[c]) << '\n';
  }
  return kExitOk;
}

int cmd_wce(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o);
  const LatticeRule lattice = lattice_from(o);
  const Scheme scheme = parse_scheme(o.scheme);
  const ProductWeights gamma = weights_for(o.gamma, lattice.dimension());
  const WeightedRule rule = build_rule(lattice, scheme);
  const WceBreakdown b = wce_decomposition(rule, gamma);
  const double direct = wce_generic_squared(rule, KernelKind::usobolev1, gamma);
  bool consistent = close(b.sq_total, direct, 1e-10);

  const bool closed_form = lattice.dimension() == 2 && scheme == Scheme::optimal;
  MixturePair pair;
  MixtureBounds bounds;
  bool agreement = true;
  if (closed_form) {
    pair = mixture_term_s2(lattice, gamma);
    bounds = mixture_bounds_s2(lattice, gamma);
    agreement = close(pair.total(), b.mixture, 1e-9) && close(b.sq_korobov + pair.total(), b.sq_total, 1e-9);
  }
  const double wce = b.sq_total > 0.0 ? std::sqrt(b.sq_total) : 0.0;

  if (o.format == "json") {
    nlohmann::json j;
    j["N"] = lattice.size();
    j["s"] = lattice.dimension();
    j["z"] = parse_integer_list(o.z);
    j["scheme"] = std::string(to_string(scheme));
    j["wce"] = wce;
    j["breakdown"] = to_json(b);
    j["direct_sq_total"] = direct;
    if (closed_form) {
      j["closed_form"] = {{"mixture", pair.total()}, {"w1", pair.w1}, {"w2", pair.w2},
                          {"term_w1", pair.term_w1}, {"term_w2", pair.term_w2}, {"lower", bounds.lower},
                          {"upper", bounds.upper}, {"agreement", agreement}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "N,s,z,scheme,wce,sq_total,sq_korobov,sq_multilinear,mixture";
    if (closed_form) out << ",closed_mixture,term_w1,term_w2,lower,upper,agreement";
    out << '\n';
    out << lattice.size() << ',' << lattice.dimension() << ',' << join_generator(lattice) << ',' << to_string(scheme)
        << ',' << format_value(wce) << ',' << format_value(b.sq_total) << ',' << format_value(b.sq_korobov) << ','
        << format_value(b.sq_multilinear) << ',' << format_value(b.mixture);
    if (closed_form) {
      out << ',' << format_value(pair.total()) << ',' << format_value(pair.term_w1) << ','
          << format_value(pair.term_w2) << ',' << format_value(bounds.lower) << ',' << format_value(bounds.upper)
          << ',' << (agreement ? "true" : "false");
    }
    out << '\n';
  }
  if (!consistent || !agreement) {
    err << "error: decomposition disagrees with the direct Sobolev-kernel error or the closed form\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  require_format(o);
  if (o.n.empty()) throw DomainError("--N is required");
  const auto primes = prime_list(o.n);
  const auto results = reproduce_table(primes, weights_for(o.gamma, 2), resolve_jobs(o.jobs), o.full);
  if (o.format == "json") {
    auto rows = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json row{{"N", r.N}, {"z", r.z_best}, {"wce2_total", r.sq_total}, {"wce2_korobov", r.sq_korobov},
                         {"mixture", r.mixture}};
      if (o.full && r.all_rows) {
        auto all = nlohmann::json::array();
        for (const auto& a : *r.all_rows) {
          all.push_back({{"z", a.z}, {"wce2_total", a.sq_total}, {"wce2_korobov", a.sq_korobov},
                         {"mixture", a.mixture}});
        }
        row["all_rows"] = std::move(all);
      }
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
  } else {
    write_search_csv(out, results, o.full);
  }
  return kExitOk;
}

int cmd_fib(const Options& o, std::ostream& out) {
  if (o.k.empty()) throw DomainError("--k is required");
  const auto ks = parse_integer_list(o.k);
  for (auto k : ks) {
    if (k < 4) throw DomainError("--k must be at least 4, got " + std::to_string(k));
    if (k > 92) throw Overflow("F_" + std::to_string(k) + " exceeds 64-bit range");
  }
  const ProductWeights gamma = weights_for(o.gamma, 2);
  std::vector<FibonacciEvaluation> rows(ks.size());
  run_parallel(ks.size(), resolve_jobs(o.jobs),
               [&](std::size_t i) { rows[i] = fibonacci_rule(static_cast<int>(ks[i]), gamma); });
  out << "k,N,z,wce2_total,wce2_korobov,wce2_multilinear,mixture,term_w1,term_w2,halves_equal\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.N << ',' << r.z << ',' << format_value(r.breakdown.sq_total) << ','
        << format_value(r.breakdown.sq_korobov) << ',' << format_value(r.breakdown.sq_multilinear) << ','
        << format_value(r.breakdown.mixture) << ',' << format_value(r.halves.term_w1) << ','
        << format_value(r.halves.term_w2) << ',' << (r.halves_equal ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  if (o.n.empty()) throw DomainError("--N is required");
  const auto ns = expand_list(o.n, [](Integer v) { return v >= 3; });
  for (auto n : ns) {
    if (n < 2) throw DomainError("--N entries must be at least 2");
  }
  if (!o.z.empty()) {
    const Integer z = detail::parse_integer(o.z);
    out << "N,z,with_z,with_inverse,deviation,tolerance,pass\n";
    for (auto n : ns) {
      const auto sums = conjecture_sums(z, Modulus(n));
      const double tol = 1e-10 * static_cast<double>(n);
      out << n << ',' << reduce(z, Modulus(n)) << ',' << format_value(sums.with_z) << ','
          << format_value(sums.with_inverse) << ',' << format_value(sums.deviation()) << ',' << format_value(tol)
          << ',' << (sums.deviation() < tol ? "true" : "false") << '\n';
    }
    return kExitOk;
  }
  struct Row {
    Integer count = 0;
    double max_deviation = 0.0;
  };
  std::vector<Row> rows(ns.size());
  run_parallel(ns.size(), resolve_jobs(o.jobs), [&](std::size_t i) {
    const Modulus n(ns[i]);
    for (Integer z = 1; z < n.value(); ++z) {
      if (gcd(z, n.value()) != 1) continue;
      ++rows[i].count;
      rows[i].max_deviation = std::max(rows[i].max_deviation, check_conjecture(z, n));
    }
  });
  out << "N,z_count,max_deviation,tolerance,pass\n";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double tol = 1e-10 * static_cast<double>(ns[i]);
    out << ns[i] << ',' << rows[i].count << ',' << format_value(rows[i].max_deviation) << ',' << format_value(tol)
        << ',' << (rows[i].max_deviation < tol ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_plotdata(const Options& o, std::ostream& out) {
  if (o.n.empty()) throw DomainError("--N is required");
  const auto primes = prime_list(o.n);
  const auto results = reproduce_table(primes, weights_for(o.gamma, 2), resolve_jobs(o.jobs), false);
  out << "N,sqrt_sq_total,sqrt_mixture,ref_loghalf,ref_log2\n";
  for (const auto& r : results) {
    const double nd = static_cast<double>(r.N);
    const double log_n = std::log(nd);
    out << r.N << ',' << format_value(std::sqrt(r.sq_total)) << ',' << format_value(std::sqrt(r.mixture)) << ','
        << format_value(std::sqrt(log_n) / nd) << ',' << format_value(log_n * log_n / nd) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex modified lattice rules: construction, worst-case errors, generator search"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "Write to this file instead of stdout");
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", o.jobs, "Worker threads (VMLATTICE_JOBS overrides)");
  };

  auto* weights = app.add_subcommand("weights", "Corner weights of a vertex modified rule");
  weights->add_option("--N", o.n, "Number of lattice points")->required();
  weights->add_option("--z", o.z, "Generating vector, comma separated")->required();
  weights->add_option("--s", o.s, "Dimension (defaults to the length of z)");
  weights->add_option("--scheme", o.scheme, "plain | trapezoidal | optimal");
  weights->add_option("--format", o.format, "csv | json");
  add_output(weights);

  auto* wce = app.add_subcommand("wce", "Worst-case error breakdown in the unanchored Sobolev space");
  wce->add_option("--N", o.n, "Number of lattice points")->required();
  wce->add_option("--z", o.z, "Generating vector, comma separated")->required();
  wce->add_option("--s", o.s, "Dimension (defaults to the length of z)");
  wce->add_option("--gamma", o.gamma, "Product weights, one value or one per dimension");
  wce->add_option("--scheme", o.scheme, "plain | trapezoidal | optimal");
  wce->add_option("--format", o.format, "csv | json");
  add_output(wce);

  auto* search = app.add_subcommand("search", "Best generator (1, z) for prime N by fast convolution");
  search->add_option("--N", o.n, "Primes, comma separated; a..b selects the primes in a range")->required();
  search->add_option("--gamma", o.gamma, "Product weights");
  search->add_flag("--full", o.full, "Emit every generator, not just the optimum");
  search->add_option("--format", o.format, "csv | json");
  add_jobs(search);
  add_output(search);

  auto* fib = app.add_subcommand("fib", "Optimal vertex modified Fibonacci lattice rules");
  fib->add_option("--k", o.k, "Fibonacci index or range, e.g. 4..12")->required();
  fib->add_option("--gamma", o.gamma, "Product weights");
  add_jobs(fib);
  add_output(fib);

  auto* conjecture = app.add_subcommand("conjecture", "Check the z <-> z^-1 symmetry of the B1 B2 B1 double sum");
  conjecture->add_option("--N", o.n, "Moduli, comma separated or a..b")->required();
  conjecture->add_option("--z", o.z, "Single generator (default: sweep all coprime z)");
  add_jobs(conjecture);
  add_output(conjecture);

  auto* plot = app.add_subcommand("plotdata", "Optimal error and mixture term with reference curves");
  plot->add_option("--N", o.n, "Primes, comma separated; a..b selects the primes in a range")->required();
  plot->add_option("--gamma", o.gamma, "Product weights");
  add_jobs(plot);
  add_output(plot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "error: cannot open " << o.output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = o.output.empty() ? out : file;

  try {
    if (weights->parsed()) return cmd_weights(o, sink);
    if (wce->parsed()) return cmd_wce(o, sink, err);
    if (search->parsed()) return cmd_search(o, sink);
    if (fib->parsed()) return cmd_fib(o, sink);
    if (conjecture->parsed()) return cmd_conjecture(o, sink);
    if (plot->parsed()) return cmd_plotdata(o, sink);
  } catch (const NumericalConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vmlattice::cli
