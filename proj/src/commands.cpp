#include "weylkit/commands.hpp"

#include <chrono>
#include <optional>

#include "CLI11.hpp"
#include "weylkit/classify.hpp"
#include "weylkit/closed_form.hpp"
#include "weylkit/envelope.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/freudenthal.hpp"
#include "weylkit/reference_tables.hpp"
#include "weylkit/result_cache.hpp"
#include "weylkit/weight_spec.hpp"
#include "weylkit/weyl_group.hpp"

namespace weylkit::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string type;
  int rank = 0;
  std::string lambda;
  std::string mu;
  std::string p = "generic";
  std::string mode = "all";
  int exponent = 4;
  std::string name;
  std::string format = "json";
  std::string labels = "reversed";
  std::string cache_dir;
  bool verify_cache = false;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct Context {
  LieType type;
  LabelConvention convention;
  OutputFormat format;

  std::string render(const Weight& w) const { return render_weight_spec(w, type, convention); }
  Weight parse(const std::string& text) const { return parse_weight_spec(text, type, convention); }
};

Context make_context(const Options& o) {
  return {LieType(parse_family(o.type), o.rank), parse_label_convention(o.labels), parse_output_format(o.format)};
}

Weight require_dominant(const Weight& w) {
  if (!w.is_dominant()) throw ValidationError("weight " + w.to_string() + " is not dominant");
  return w;
}

std::shared_ptr<const MultiplicityTable> table_for(const Options& o, const LieType& t, const Weight& lambda,
                                                   std::ostream& err) {
  auto cache = ResultCache::configure(o.cache_dir.empty() ? std::nullopt : std::optional<std::string>(o.cache_dir));
  if (!cache) return multiplicity_table(t, lambda);
  return cache->fetch(t, lambda, o.verify_cache, err).table;
}

int cmd_mult(const Options& o, std::ostream& out, std::ostream& err) {
  Timer timer;
  Context ctx = make_context(o);
  Weight lambda = require_dominant(ctx.parse(o.lambda));
  Envelope env{"mult", ctx.type, ctx.convention};
  env.weights["lambda"] = ctx.render(lambda);
  auto table = table_for(o, ctx.type, lambda, err);

  if (!o.mu.empty()) {
    Weight mu = ctx.parse(o.mu);
    env.weights["mu"] = ctx.render(mu);
    BigInt m = table->multiplicity(dominant_representative(ctx.type, mu));
    env.values["multiplicity"] = to_decimal(m);
    env.columns = {"mu", "multiplicity"};
    env.rows.push_back({ctx.render(mu), to_decimal(m)});
  } else {
    ordered_json rows = ordered_json::array();
    env.columns = {"mu", "multiplicity", "orbit_length", "depth"};
    for (const auto& r : table->rows()) {
      rows.push_back({{"mu", ctx.render(r.mu)},
                      {"multiplicity", to_decimal(r.multiplicity)},
                      {"orbit_length", to_decimal(r.orbit_length)},
                      {"depth", r.depth}});
      env.rows.push_back(
          {ctx.render(r.mu), to_decimal(r.multiplicity), to_decimal(r.orbit_length), std::to_string(r.depth)});
    }
    env.values["dimension"] = to_decimal(table->dimension());
    env.values["rows"] = std::move(rows);
    env.notes.push_back("dimension is the sum over dominant weights of multiplicity times orbit length");
  }
  env.timing_ms = timer.elapsed_ms();
  out << env.render(ctx.format);
  return kExitOk;
}

int cmd_dim(const Options& o, std::ostream& out, std::ostream& err) {
  Timer timer;
  Context ctx = make_context(o);
  Weight lambda = require_dominant(ctx.parse(o.lambda));
  Characteristic p = Characteristic::parse(o.p);
  if (o.mode != "all" && o.mode != "weyl" && o.mode != "sum" && o.mode != "closed") {
    throw ValidationError("unknown mode '" + o.mode + "' (expected weyl, sum, closed or all)");
  }
  const bool all = o.mode == "all";
  Envelope env{"dim", ctx.type, ctx.convention};
  env.weights["lambda"] = ctx.render(lambda);
  env.values["p"] = p.to_string();
  env.columns = {"quantity", "value"};

  std::optional<BigInt> weyl, sum;
  if (all || o.mode == "weyl") {
    weyl = dim_weyl_product(ctx.type, lambda);
    env.values["weyl"] = to_decimal(*weyl);
    env.rows.push_back({"weyl", to_decimal(*weyl)});
  }
  if (all || o.mode == "sum") {
    sum = table_for(o, ctx.type, lambda, err)->dimension();
    env.values["sum"] = to_decimal(*sum);
    env.rows.push_back({"sum", to_decimal(*sum)});
  }
  if (weyl && sum && *weyl != *sum) {
    err << "weylkit: internal invariant violated: Weyl product " << to_decimal(*weyl) << " != orbit sum "
        << to_decimal(*sum) << " for " << ctx.type.name() << " " << lambda.to_string() << "\n";
    return kExitInvariant;
  }
  if (all || o.mode == "closed") {
    ClosedDimension closed = dim_closed(ctx.type, lambda, p);
    std::string value = closed.known() ? to_decimal(*closed.value) : "unknown";
    env.values["closed"] = value;
    env.rows.push_back({"closed", value});
    if (closed.known()) {
      env.values["closed_status"] = to_string(closed.status);
      env.values["formula_id"] = closed.formula_id;
      env.values["condition"] = closed.condition;
      env.values["expression"] = closed.expression;
      env.values["citation"] = closed.citation;
      if (!closed.note.empty()) env.notes.push_back(closed.note);
      if (closed.status != FormulaStatus::Proven) {
        env.notes.push_back("closed form " + closed.formula_id + " is " + to_string(closed.status));
      }
    }
  }
  env.timing_ms = timer.elapsed_ms();
  out << env.render(ctx.format);
  return kExitOk;
}

ordered_json certificate_json(const Context& ctx, const Certificate& c) {
  ordered_json j;
  j["kind"] = to_string(c.kind);
  j["source"] = c.source;
  j["value"] = to_decimal(c.value);
  ordered_json w = ordered_json::array();
  for (std::size_t k = 0; k < c.witnesses.size(); ++k) {
    w.push_back({{"mu", ctx.render(c.witnesses[k])},
                 {"orbit_length", k < c.orbit_lengths.size() ? to_decimal(c.orbit_lengths[k]) : ""}});
  }
  j["witnesses"] = std::move(w);
  return j;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream&) {
  Timer timer;
  Context ctx = make_context(o);
  Characteristic p = Characteristic::parse(o.p);
  AdmissibleReport report = classify_admissible(ctx.type, p, o.exponent);

  Envelope env{"classify", ctx.type, ctx.convention};
  env.values["p"] = p.to_string();
  env.values["exponent"] = o.exponent;
  env.values["bound"] = report.bound.to_string();
  env.values["support"] = report.support;
  ordered_json admissible = ordered_json::array();
  for (const auto& w : report.admissible()) admissible.push_back(ctx.render(w));
  env.values["admissible"] = std::move(admissible);

  ordered_json verdicts = ordered_json::array();
  env.columns = {"lambda", "status", "dimension", "provenance"};
  for (const auto& v : report.verdicts) {
    std::string dim = v.dimension ? to_decimal(*v.dimension) : "";
    ordered_json j;
    j["lambda"] = ctx.render(v.weight);
    j["status"] = to_string(v.status);
    j["dimension"] = dim;
    j["weyl_dimension"] = to_decimal(v.weyl_dimension);
    j["provenance"] = v.provenance;
    verdicts.push_back(std::move(j));
    env.rows.push_back({ctx.render(v.weight), to_string(v.status), dim, v.provenance});
  }
  env.values["verdicts"] = std::move(verdicts);

  ordered_json audit = ordered_json::array();
  for (const auto& a : report.audit) {
    ordered_json j;
    j["lambda"] = ctx.render(a.weight);
    j["rule"] = a.rule;
    if (a.parent) j["from"] = ctx.render(*a.parent);
    j["certificate"] = certificate_json(ctx, a.certificate);
    audit.push_back(std::move(j));
  }
  env.values["audit"] = std::move(audit);
  env.notes = report.notes;
  env.timing_ms = timer.elapsed_ms();
  out << env.render(ctx.format);
  return kExitOk;
}

std::string optional_decimal(const std::optional<BigInt>& v) { return v ? to_decimal(*v) : ""; }
std::string optional_decimal(const std::optional<Rational>& v) { return v ? to_decimal(*v) : ""; }

int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
  Timer timer;
  OutputFormat format = parse_output_format(o.format);
  LabelConvention convention = parse_label_convention(o.labels);
  ReferenceTable table = reproduce_table(o.name, o.rank);
  Context ctx{table.type, convention, format};

  Envelope env{"table", table.type, convention};
  env.values["name"] = table.name;
  env.values["title"] = table.title;
  env.values["kind"] = table.kind;
  env.values["discrepancies"] = table.discrepancy_count();

  if (table.kind == "multiplicity") {
    env.columns = {"highest", "mu", "weight", "multiplicity", "orbit_length", "printed_multiplicity",
                   "printed_orbit_length", "status", "note"};
    ordered_json blocks = ordered_json::array();
    for (const auto& b : table.blocks) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : b.rows) {
        std::vector<std::string> cells = {b.highest_pattern,
                                          r.mu_pattern,
                                          ctx.render(r.mu),
                                          optional_decimal(r.multiplicity),
                                          optional_decimal(r.orbit_length),
                                          optional_decimal(r.printed_multiplicity),
                                          optional_decimal(r.printed_orbit),
                                          to_string(r.status),
                                          r.note};
        ordered_json j;
        for (std::size_t k = 1; k < cells.size(); ++k) j[env.columns[k]] = cells[k];
        j["printed_multiplicity_text"] = r.printed_multiplicity_text;
        j["printed_orbit_length_text"] = r.printed_orbit_text;
        rows.push_back(std::move(j));
        env.rows.push_back(std::move(cells));
      }
      blocks.push_back({{"highest", b.highest_pattern},
                        {"weight", ctx.render(b.highest)},
                        {"dimension", to_decimal(b.dimension)},
                        {"rows", std::move(rows)}});
    }
    env.values["blocks"] = std::move(blocks);
  } else {
    env.columns = {"lambda", "weight", "dimension", "characteristic", "corrections", "dim_V", "status", "note"};
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.dimension_rows) {
      const auto& first = r.branches.front();
      std::string corrections;
      for (std::size_t k = 1; k < r.branches.size(); ++k) {
        corrections += (k > 1 ? "; " : "") + to_decimal(r.branches[k].dimension) + " if " + r.branches[k].characteristic;
      }
      std::vector<std::string> cells = {r.pattern,      ctx.render(r.weight),      to_decimal(first.dimension),
                                        first.characteristic, corrections, to_decimal(r.weyl_dimension),
                                        to_string(r.status), r.note};
      ordered_json j;
      for (std::size_t k = 0; k < cells.size(); ++k) j[env.columns[k]] = cells[k];
      rows.push_back(std::move(j));
      env.rows.push_back(std::move(cells));
    }
    env.values["rows"] = std::move(rows);
  }
  env.notes = table.notes;
  if (table.discrepancy_count() > 0) {
    env.notes.push_back(std::to_string(table.discrepancy_count()) +
                        " row(s) differ from the printed table; see the status and note columns");
  }
  env.timing_ms = timer.elapsed_ms();
  out << env.render(format);
  return kExitOk;
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json, csv or md")->capture_default_str();
  sub->add_option("--label-convention", o.labels, "reversed or bourbaki node labels")->capture_default_str();
}

void add_type_options(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "family A, B, C or D")->required();
  sub->add_option("--rank", o.rank, "rank l")->required();
}

void add_cache_options(CLI::App* sub, Options& o) {
  sub->add_option("--cache-dir", o.cache_dir, "multiplicity table cache (default: $WEYLKIT_CACHE)");
  sub->add_flag("--verify-cache", o.verify_cache, "recompute cache hits and replace differing entries");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Weight multiplicities, orbit lengths, dimensions and admissible weights for types A-D", "weylkit"};
  app.require_subcommand(1);

  auto* mult = app.add_subcommand("mult", "weight multiplicities of V(lambda)");
  add_type_options(mult, o);
  mult->add_option("--lambda", o.lambda, "highest weight, e.g. 3*w12")->required();
  mult->add_option("--mu", o.mu, "single weight; omit for the full table");
  add_output_options(mult, o);
  add_cache_options(mult, o);

  auto* dim = app.add_subcommand("dim", "dimension of V(lambda) and closed-form dim L(lambda)");
  add_type_options(dim, o);
  dim->add_option("--lambda", o.lambda, "highest weight")->required();
  dim->add_option("--p", o.p, "prime or generic")->capture_default_str();
  dim->add_option("--mode", o.mode, "weyl, sum, closed or all")->capture_default_str();
  add_output_options(dim, o);
  add_cache_options(dim, o);

  auto* classify = app.add_subcommand("classify", "admissible p-restricted weights");
  add_type_options(classify, o);
  classify->add_option("--p", o.p, "prime or generic")->capture_default_str();
  classify->add_option("--exponent", o.exponent, "n in the bound l^n (A: (l/2)^n)")->capture_default_str();
  add_output_options(classify, o);

  auto* table = app.add_subcommand("table", "recompute a printed table and compare");
  table->add_option("--name", o.name, "appendix-c, appendix-d, lemma-b2, lemma-b3 or theorem-a")->required();
  table->add_option("--rank", o.rank, "rank l")->required();
  add_output_options(table, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "weylkit: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (mult->parsed()) return cmd_mult(o, out, err);
    if (dim->parsed()) return cmd_dim(o, out, err);
    if (classify->parsed()) return cmd_classify(o, out, err);
    if (table->parsed()) return cmd_table(o, out, err);
  } catch (const ValidationError& e) {
    err << "weylkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "weylkit: internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "weylkit: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace weylkit::cli
