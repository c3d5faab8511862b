// Copyright 2026 The bernfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bernfact/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "bernfact/constants.hpp"
#include "bernfact/verification.hpp"
#include "json.hpp"

namespace bernfact::cli {

namespace {

using nlohmann::json;

struct Row {
  std::string name;
  CheckParams params;
  std::string method;
  std::string value;
  std::optional<long> m;
  std::string bound;  // "-" when the route has none
  bool certified = true;
};

long need(const std::optional<long>& v, const char* flag, const std::string& selector) {
  if (!v) throw UsageError(selector + " needs " + flag);
  return *v;
}

std::string bound_string(const ConstantReport& rep) {
  return rep.error_bound ? format_scientific(*rep.error_bound, 4) : "-";
}

// Closed forms must certify every requested digit; series enclosures print
// their certified prefix with the '?' marker instead.
bool requires_certification(Method m) {
  return m == Method::closed_form || m == Method::linear_system;
}

Row to_row(const ConstantReport& rep, int digits) {
  Row row;
  row.name = rep.name;
  row.params = rep.params;
  row.method = to_string(rep.method);
  row.value = round_to_digits(rep.value, digits);
  if (rep.truncation || rep.method == Method::refined_sum) {
    auto it = rep.params.find("m");
    if (it != rep.params.end()) row.m = it->second;
  }
  row.bound = bound_string(rep);
  row.certified = !requires_certification(rep.method) || certifies_digits(rep.value, digits);
  return row;
}

// Runs `compute` at the requested digits and once more with doubled guard
// digits when a closed form does not certify.
template <class F>
ConstantReport certified(const CommandRequest& req, F compute) {
  const PrecisionContext ctx(req.digits);
  ConstantReport rep = compute(ctx);
  if (requires_certification(rep.method) && !certifies_digits(rep.value, req.digits)) {
    rep = compute(ctx.with_doubled_guard());
  }
  return rep;
}

ConstantReport compute_constant(const CommandRequest& req) {
  const std::string& s = req.selector;
  if (s == "C1" || s == "C2" || s == "C3") {
    const int which = s[1] - '0';
    return certified(req, [which](const PrecisionContext& c) { return c_constant(which, c); });
  }
  if (s == "A") {
    const unsigned r = static_cast<unsigned>(req.r.value_or(1));
    return certified(req, [r](const PrecisionContext& c) { return glaisher_a(r, c); });
  }
  if (s == "F_k") {
    const long k = need(req.k, "--k", s);
    return certified(req, [k](const PrecisionContext& c) { return f_k_closed(k, c); });
  }
  if (s == "F_k_series") {
    const long k = need(req.k, "--k", s);
    return f_k_series(k, PrecisionContext(req.digits));
  }
  if (s == "F_k_linear") {
    const long k = need(req.k, "--k", s);
    return certified(req, [k](const PrecisionContext& c) { return f_k_via_linear_system(k, c).report; });
  }
  if (s == "F_inf") {
    if (req.n || req.m) {
      return f_infty_refined(req.n.value_or(7), req.m.value_or(17), PrecisionContext(req.digits)).report;
    }
    return f_infty_weak(PrecisionContext(req.digits));
  }
  if (s == "F_r1") {
    const unsigned r = static_cast<unsigned>(need(req.r, "--r", s));
    return certified(req, [r](const PrecisionContext& c) { return f_r1(r, c); });
  }
  if (s == "F_rk") {
    const unsigned r = static_cast<unsigned>(need(req.r, "--r", s));
    const long k = need(req.k, "--k", s);
    return f_rk_series(r, k, PrecisionContext(req.digits));
  }
  const std::vector<std::string> b_names = {"B1", "B2", "B3", "Bprime"};
  const auto it = std::find(b_names.begin(), b_names.end(), s);
  if (it != b_names.end()) {
    const auto index = static_cast<std::size_t>(it - b_names.begin());
    return certified(req, [index](const PrecisionContext& c) { return b_family(c)[index]; });
  }
  throw UsageError("unknown constant: " + s);
}

// The weak interval rounded outward to five decimals, as in printed tables.
std::string outward_interval(const BoundedReal& x) {
  detail::Mpfr lo(x.precision());
  detail::Mpfr hi(x.precision());
  mpfr_sub(lo.get(), x.mid(), x.radius(), MPFR_RNDD);
  mpfr_add(hi.get(), x.mid(), x.radius(), MPFR_RNDU);
  mpfr_mul_ui(lo.get(), lo.get(), 100000, MPFR_RNDD);
  mpfr_mul_ui(hi.get(), hi.get(), 100000, MPFR_RNDU);
  mpfr_floor(lo.get(), lo.get());
  mpfr_ceil(hi.get(), hi.get());
  std::ostringstream os;
  os << std::fixed << std::setprecision(5) << "(" << mpfr_get_d(lo.get(), MPFR_RNDN) / 1e5
     << ", " << mpfr_get_d(hi.get(), MPFR_RNDN) / 1e5 << ")";
  return os.str();
}

std::vector<Row> compute_table(const CommandRequest& req) {
  const PrecisionContext ctx(req.digits);
  std::vector<Row> rows;
  if (req.selector == "f-constants") {
    for (long k = 1; k <= 6; ++k) {
      Row row = to_row(certified(req, [k](const PrecisionContext& c) { return f_k_closed(k, c); }),
                       req.digits);
      const ConstantReport series = f_k_series(k, ctx);
      row.m = series.params.at("m");
      row.bound = bound_string(series);
      rows.push_back(std::move(row));
    }
    const ConstantReport weak = f_infty_weak(ctx);
    Row w = to_row(weak, req.digits);
    w.value = outward_interval(weak.value);
    rows.push_back(std::move(w));
    rows.push_back(to_row(f_infty_refined(7, 17, ctx).report, req.digits));
  } else if (req.selector == "b-constants") {
    std::vector<ConstantReport> family = b_family(ctx);
    const bool all_certified = std::all_of(family.begin(), family.end(), [&](const ConstantReport& r) {
      return certifies_digits(r.value, req.digits);
    });
    if (!all_certified) family = b_family(ctx.with_doubled_guard());
    for (const ConstantReport& rep : family) rows.push_back(to_row(rep, req.digits));
  } else if (req.selector == "fr1-constants") {
    for (unsigned r = 0; r <= 5; ++r) {
      rows.push_back(to_row(certified(req, [r](const PrecisionContext& c) { return f_r1(r, c); }),
                            req.digits));
    }
  } else {
    throw UsageError("unknown table: " + req.selector);
  }
  return rows;
}

std::string params_string(const CheckParams& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ',';
    out += key + "=" + std::to_string(value);
  }
  return out.empty() ? "-" : out;
}

json row_json(const Row& row, int digits) {
  json j;
  j["name"] = row.name;
  j["params"] = row.params;
  j["method"] = row.method;
  j["digits"] = digits;
  j["value"] = row.value;
  j["m"] = row.m ? json(*row.m) : json(nullptr);
  j["bound"] = row.bound;
  return j;
}

int render_constant(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  const Row row = to_row(compute_constant(req), req.digits);
  if (req.format == OutputFormat::structured) {
    out << row_json(row, req.digits).dump() << '\n';
  } else {
    out << "name    " << row.name << '\n'
        << "params  " << params_string(row.params) << '\n'
        << "method  " << row.method << '\n'
        << "digits  " << req.digits << '\n'
        << "value   " << row.value << '\n'
        << "bound   " << row.bound << '\n';
  }
  if (!row.certified) {
    err << "error: could not certify " << req.digits << " digits of " << row.name << '\n';
    return kExitCheckFailure;
  }
  return kExitPass;
}

int render_table(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  const std::vector<Row> rows = compute_table(req);
  bool ok = true;
  for (const Row& row : rows) ok = ok && row.certified;
  if (req.format == OutputFormat::structured) {
    json j;
    j["table"] = req.selector;
    j["digits"] = req.digits;
    j["rows"] = json::array();
    for (const Row& row : rows) j["rows"].push_back(row_json(row, req.digits));
    out << j.dump() << '\n';
  } else {
    std::size_t width = 5;
    for (const Row& row : rows) width = std::max(width, row.value.size());
    out << std::left << std::setw(8) << "name" << std::setw(10) << "params"
        << std::setw(static_cast<int>(width) + 2) << "value" << std::setw(5) << "m" << "bound\n";
    for (const Row& row : rows) {
      out << std::left << std::setw(8) << row.name << std::setw(10) << params_string(row.params)
          << std::setw(static_cast<int>(width) + 2) << row.value << std::setw(5)
          << (row.m ? std::to_string(*row.m) : "-") << row.bound << '\n';
    }
  }
  if (!ok) {
    err << "error: some table values could not be certified to " << req.digits << " digits\n";
    return kExitCheckFailure;
  }
  return kExitPass;
}

std::vector<long> milnor_grid(long top) {
  std::vector<long> grid;
  for (long n : {top / 100, top / 10, top}) {
    if (n >= 1 && (grid.empty() || n > grid.back())) grid.push_back(n);
  }
  return grid;
}

int render_checks(const CommandRequest& req, const std::vector<IdentityReport>& identities,
                  const std::vector<RatioReport>& ratios, std::ostream& out, std::ostream& err) {
  bool ok = true;
  for (const auto& r : identities) ok = ok && r.passed();
  for (const auto& r : ratios) ok = ok && r.passed();
  if (req.format == OutputFormat::structured) {
    json j;
    j["command"] = req.command == Command::verify ? "verify" : "ratio";
    j["selector"] = req.selector;
    j["passed"] = ok;
    j["checks"] = json::array();
    for (const auto& r : identities) j["checks"].push_back(to_json(r));
    for (const auto& r : ratios) j["checks"].push_back(to_json(r));
    out << j.dump() << '\n';
  } else {
    for (const auto& r : identities) out << to_text(r) << '\n';
    for (const auto& r : ratios) out << to_text(r) << '\n';
  }
  if (!ok) err << "error: " << req.selector << ": at least one check failed\n";
  return ok ? kExitPass : kExitCheckFailure;
}

int run_verify(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  const PrecisionContext ctx(req.digits);
  const std::string& s = req.selector;
  std::vector<IdentityReport> identities;
  std::vector<RatioReport> ratios;
  if (s == "identities" || s == "all") {
    identities = identity_suite();
  }
  if (s == "eta" || s == "all") {
    identities.push_back(eta_identity_check(static_cast<unsigned long>(req.prime_bound.value_or(100000)), ctx));
  }
  if (s == "abelian" || s == "all") {
    identities.push_back(abelian_average_check(s == "all" ? 1000000 : req.n.value_or(1000000), ctx));
  }
  if (s == "milnor" || s == "all") {
    ratios.push_back(milnor_equivalence_check(milnor_grid(s == "all" ? 1000 : req.n.value_or(1000)), ctx));
  }
  return render_checks(req, identities, ratios, out, err);
}

std::vector<RatioSpec> ratio_targets(const CommandRequest& req) {
  std::vector<RatioSpec> out;
  for (const RatioSpec& spec : standard_ratio_targets()) {
    if (req.selector != "all" && to_string(spec) != req.selector) continue;
    RatioSpec chosen = spec;
    if (req.k) chosen.k = *req.k;
    if (req.r) chosen.r = static_cast<unsigned>(*req.r);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const RatioSpec& u) {
      return u.target == chosen.target && u.k == chosen.k && u.r == chosen.r;
    });
    if (!seen) out.push_back(chosen);
  }
  return out;
}

int run_ratio(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  const long top = req.n.value_or(100);
  const std::vector<long> grid = {top / 4, top / 2, top};
  const auto reports = ratio_suite(ratio_targets(req), grid, PrecisionContext(req.digits));
  return render_checks(req, {}, reports, out, err);
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

std::optional<Command> parse_command(const std::string& s) {
  if (s == "constant") return Command::constant;
  if (s == "table") return Command::table;
  if (s == "verify") return Command::verify;
  if (s == "ratio") return Command::ratio;
  return std::nullopt;
}

const std::vector<std::string>& selectors(Command c) {
  static const std::vector<std::string> constant = {
      "C1", "C2", "C3", "A", "F_k", "F_k_series", "F_k_linear", "F_inf",
      "F_r1", "F_rk", "B1", "B2", "B3", "Bprime"};
  static const std::vector<std::string> table = {"f-constants", "b-constants", "fr1-constants"};
  static const std::vector<std::string> verify = {"identities", "eta", "abelian", "milnor", "all"};
  static const std::vector<std::string> ratio = [] {
    std::vector<std::string> out = {"all"};
    for (const RatioSpec& s : standard_ratio_targets()) {
      if (!contains(out, to_string(s))) out.push_back(to_string(s));
    }
    return out;
  }();
  switch (c) {
    case Command::constant:
      return constant;
    case Command::table:
      return table;
    case Command::verify:
      return verify;
    case Command::ratio:
      return ratio;
  }
  return constant;
}

void validate(const CommandRequest& req) {
  if (req.digits < 1 || req.digits > kMaxDigits) {
    throw UsageError("--digits must be in [1, " + std::to_string(kMaxDigits) + "]");
  }
  if (!contains(selectors(req.command), req.selector)) {
    throw UsageError("unknown selector '" + req.selector + "'");
  }
  const std::string& s = req.selector;
  if (req.k && *req.k < 1) throw UsageError("--k must be >= 1");
  if (req.r && *req.r < 0) throw UsageError("--r must be >= 0");
  if (req.prime_bound && *req.prime_bound < 2) throw UsageError("--prime-bound must be >= 2");
  if (req.command == Command::constant) {
    if ((s == "F_k" || s == "F_k_series" || s == "F_k_linear" || s == "F_rk") && !req.k) {
      throw UsageError(s + " needs --k");
    }
    if ((s == "F_r1" || s == "F_rk") && !req.r) throw UsageError(s + " needs --r");
    if (s == "F_k_linear" && *req.k < 2) throw UsageError("F_k_linear needs --k >= 2");
    if (s == "F_inf" && req.n && *req.n < 1) throw UsageError("--n must be >= 1");
    if (s == "F_inf" && req.m && *req.m <= 2) throw UsageError("--m must be > 2");
  }
  if (req.command == Command::verify && req.n && *req.n < 1) throw UsageError("--n must be >= 1");
  if (req.command == Command::ratio) {
    if (req.n && *req.n < 4) throw UsageError("--n must be >= 4");
    if (req.r && *req.r > 8) throw UsageError("--r must be <= 8");
  }
}

int run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    validate(request);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    switch (request.command) {
      case Command::constant:
        return render_constant(request, out, err);
      case Command::table:
        return render_table(request, out, err);
      case Command::verify:
        return run_verify(request, out, err);
      case Command::ratio:
        return run_ratio(request, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitUsage;
}

}  // namespace bernfact::cli
