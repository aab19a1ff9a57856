#include "xychain/presets.hpp"

#include <map>

#include "xychain/error.hpp"

namespace xychain {

using nlohmann::json;

namespace {

json exp_profile(double J0, double J1, double K) {
  return {{"kind", "exp"}, {"J0", J0}, {"J1", J1}, {"K", K}};
}
json tanh_profile(double J0, double J1, double K) {
  return {{"kind", "tanh"}, {"J0", J0}, {"J1", J1}, {"K", K}};
}
json cos_profile(double J0, double K) { return {{"kind", "cos"}, {"J0", J0}, {"K", K}}; }
json sin_profile(double J0, double K) { return {{"kind", "sin"}, {"J0", J0}, {"K", K}}; }
json constant(double v) { return {{"kind", "constant"}, {"J0", v}}; }
json prop(double lambda) { return {{"kind", "proportional"}, {"lambda", lambda}}; }

json chain(int N, double gamma, double kT) {
  return {{"N", N}, {"gamma", gamma}, {"kT", kT}, {"grid", "periodic"}};
}

json with(json base, const json& extra) {
  base.merge_patch(extra);
  return base;
}

std::vector<double> lambda_values() {
  std::vector<double> v;
  for (int i = 0; i < 25; ++i) v.push_back(0.2 + 2.8 * i / 24.0);
  return v;
}

// Three profiles with J(0) = 1, as variants over h(t) = J(t) / lambda.
json profile_variants() {
  return json::array({
      {{"label", "exp"}, {"overrides", {{"h", exp_profile(1.0, 2.0, 1.0)}}}},
      {{"label", "tanh"}, {"overrides", {{"h", tanh_profile(1.0, 2.0, 10.0)}}}},
      {{"label", "sin"}, {"overrides", {{"h", sin_profile(1.0, 1.0)}}}},
  });
}

json lambda_sweep(double gamma, double kT, const json& variants) {
  return with(chain(400, gamma, kT),
              {{"J", prop(1.0)},
               {"h", exp_profile(1.0, 2.0, 1.0)},
               {"t_max", 20.0},
               {"n_samples", 401},
               {"sweep", {{"variable", "lambda"}, {"values", lambda_values()},
                          {"window_fraction", 0.3}, {"variants", variants}}}});
}

// Ten periods at 200 samples per period, so t + 2 pi / K stays on the grid.
json periodic_run(const json& J, const json& h) {
  return with(chain(400, 1.0, 0.0), {{"J", J}, {"h", h}, {"n_samples", 2001}});
}

struct Entry {
  std::string description;
  json doc;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> presets = [] {
    std::map<std::string, Entry> m;
    const json fig1 = chain(1000, 1.0, 0.0);
    m["fig1a"] = {"J_exp, J0=0.5, J1=2, h=1, K=0.1, N=1000, kT=0",
                  with(fig1, {{"J", exp_profile(0.5, 2.0, 0.1)}, {"h", constant(1.0)},
                              {"t_max", 200.0}, {"n_samples", 2001}})};
    m["fig1b"] = {"J_exp, J0=0.5, J1=2, h=1, K=10, N=1000, kT=0",
                  with(fig1, {{"J", exp_profile(0.5, 2.0, 10.0)}, {"h", constant(1.0)},
                              {"t_max", 50.0}, {"n_samples", 1001}})};
    m["fig1c"] = {"J_tanh, J0=0.5, J1=2, h=1, K=0.1, N=1000, kT=0",
                  with(fig1, {{"J", tanh_profile(0.5, 2.0, 0.1)}, {"h", constant(1.0)},
                              {"t_max", 200.0}, {"n_samples", 2001}})};
    m["fig1d"] = {"J_tanh, J0=0.5, J1=2, h=1, K=10, N=1000, kT=0",
                  with(fig1, {{"J", tanh_profile(0.5, 2.0, 10.0)}, {"h", constant(1.0)},
                              {"t_max", 50.0}, {"n_samples", 1001}})};

    m["fig2"] = {"J_exp, J0=0.5, J1=2, h=1, K=1000, kT=0, N from 100 to 300",
                 with(chain(100, 1.0, 0.0),
                      {{"J", exp_profile(0.5, 2.0, 1000.0)},
                       {"h", constant(1.0)},
                       {"t_max", 120.0},
                       {"n_samples", 2401},
                       {"sweep", {{"variable", "N"},
                                  {"values", {100, 150, 200, 250, 300}},
                                  {"window_fraction", 0.3}}}})};

    const char* tags[] = {"a", "b", "c"};
    const double rates[] = {0.1, 0.5, 1.0};
    for (int i = 0; i < 3; ++i) {
      const std::string K = i == 0 ? "0.1" : i == 1 ? "0.5" : "1";
      m[std::string("fig3") + tags[i]] = {"J_cos, J0=0.5, h=1, K=" + K + ", kT=0",
                                          periodic_run(cos_profile(0.5, rates[i]), constant(1.0))};
      m[std::string("fig4") + tags[i]] = {"J_sin, J0=0.5, h=1, K=" + K + ", kT=0",
                                          periodic_run(sin_profile(0.5, rates[i]), constant(1.0))};
    }

    const json fig5 = with(chain(400, 1.0, 0.0), {{"t_max", 200.0}, {"n_samples", 2001}});
    m["fig5a"] = {"J_exp, J0=0.5, J1=1, K=0.1, h=1, kT=0",
                  with(fig5, {{"J", exp_profile(0.5, 1.0, 0.1)}, {"h", constant(1.0)}})};
    m["fig5b"] = {"h=J=J_exp, J0=0.5, J1=1, K=0.1, kT=0",
                  with(fig5, {{"J", prop(1.0)}, {"h", exp_profile(0.5, 1.0, 0.1)}})};
    m["fig5c"] = {"h=J=J_tanh, J0=0.5, J1=1, K=0.1, kT=0",
                  with(fig5, {{"J", prop(1.0)}, {"h", tanh_profile(0.5, 1.0, 0.1)}})};
    m["fig5d"] = {"h=J=J_cos, J0=h0=0.5, K=1, kT=0",
                  periodic_run(prop(1.0), cos_profile(0.5, 1.0))};
    m["fig5e"] = {"h=J=J_sin, J0=h0=0.5, K=1, kT=0",
                  periodic_run(prop(1.0), sin_profile(0.5, 1.0))};

    m["fig6a"] = {"asymptotic C vs lambda, gamma=1, kT=0, J_exp/J_tanh/J_sin with J(0)=1",
                  lambda_sweep(1.0, 0.0, profile_variants())};
    m["fig6b"] = {"asymptotic C vs lambda, gamma=1, J_exp, kT=0, 0.5, 1",
                  lambda_sweep(1.0, 0.0,
                               json::array({{{"label", "kT0"}, {"overrides", {{"kT", 0.0}}}},
                                            {{"label", "kT0.5"}, {"overrides", {{"kT", 0.5}}}},
                                            {{"label", "kT1"}, {"overrides", {{"kT", 1.0}}}}}))};
    m["fig7a"] = {"asymptotic C vs lambda, gamma=0.5, kT=0, J(0)=1",
                  lambda_sweep(0.5, 0.0, profile_variants())};
    m["fig7b"] = {"asymptotic C vs lambda, gamma=0, kT=0, J(0)=1",
                  lambda_sweep(0.0, 0.0, profile_variants())};
    for (auto& [name, e] : m) e.doc["description"] = e.description;
    return m;
  }();
  return presets;
}

}  // namespace

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  for (const auto& [name, e] : registry()) {
    out.push_back({name, e.description, e.doc.contains("sweep")});
  }
  return out;
}

json preset_document(const std::string& name) {
  const auto& m = registry();
  auto it = m.find(name);
  if (it == m.end()) throw ConfigError("unknown preset '" + name + "'");
  return it->second.doc;
}

}  // namespace xychain
