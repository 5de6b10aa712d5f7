#include "sectorlen/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sectorlen/errors.hpp"

namespace sectorlen {

ordered_json sld_to_json(const Sld& sld) {
  ordered_json j;
  j["n"] = sld.n;
  j["d"] = sld.d;
  ordered_json a_exact = ordered_json::array();
  for (const Rat& x : sld.A) a_exact.push_back(rat_to_string(x));
  j["A"] = std::move(a_exact);
  j["a"] = sld.normalized();
  j["source"] = to_string(sld.source);
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : sld.meta) meta[k] = v;
  j["meta"] = std::move(meta);
  return j;
}

Sld sld_from_json(const ordered_json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    std::vector<Rat> A;
    for (const auto& item : j.at("A")) {
      if (item.is_string()) {
        A.push_back(rat_from_string(item.get<std::string>()));
      } else {
        A.push_back(rat_from_double(item.get<double>()));
      }
    }
    SldSource source = SldSource::file;
    if (j.contains("source")) source = sld_source_from_string(j.at("source"));
    Sld out(n, d, std::move(A), source);
    if (j.contains("meta")) {
      for (const auto& [k, v] : j.at("meta").items()) {
        out.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("SLD JSON: ") + e.what());
  }
}

std::string sld_to_csv(const Sld& sld) {
  std::ostringstream out;
  out << "k,A,a\n";
  const std::vector<double> a = sld.normalized();
  out.precision(17);
  for (int k = 0; k <= sld.n; ++k) {
    out << k << "," << rat_to_string(sld.A[k]) << "," << a[k] << "\n";
  }
  return out.str();
}

ordered_json graph_to_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.n();
  j["d"] = g.d();
  ordered_json edges = ordered_json::array();
  for (int i = 0; i < g.n(); ++i) {
    for (int k = i + 1; k < g.n(); ++k) {
      if (g.has_edge(i, k)) edges.push_back({i + 1, k + 1, g.weight(i, k)});
    }
  }
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const ordered_json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int d = j.contains("d") ? j.at("d").get<int>() : 2;
    std::vector<int> w(static_cast<std::size_t>(n) * n, 0);
    for (const auto& e : j.at("edges")) {
      const int i = e.at(0).get<int>();
      const int k = e.at(1).get<int>();
      const int wt = e.size() > 2 ? e.at(2).get<int>() : 1;
      if (i < 1 || i > n || k < 1 || k > n) throw parse_error("graph JSON: vertex out of range");
      if (i == k) throw parse_error("graph JSON: self-loop");
      w[static_cast<std::size_t>(i - 1) * n + (k - 1)] = wt;
      w[static_cast<std::size_t>(k - 1) * n + (i - 1)] = wt;
    }
    return Graph(n, d, std::move(w));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("graph JSON: ") + e.what());
  }
}

ordered_json moments_to_json(const Moments& m) {
  ordered_json j;
  j["mean"] = rat_to_string(m.mean);
  j["second_moment"] = rat_to_string(m.second_moment);
  j["variance"] = rat_to_string(m.variance);
  j["mean_float"] = to_double(m.mean);
  j["variance_float"] = to_double(m.variance);
  return j;
}

ordered_json threshold_report_to_json(const ThresholdReport& r) {
  ordered_json j;
  j["criterion"] = r.criterion;
  if (r.p_lower_bound) {
    j["p_lower_bound"] = *r.p_lower_bound;
  } else {
    j["p_lower_bound"] = nullptr;
  }
  j["bracket"] = {r.bracket_lo, r.bracket_hi};
  j["evaluations"] = r.evaluations;
  j["exact_verified"] = r.exact_verified;
  return j;
}

ordered_json ensemble_report_to_json(const EnsembleReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["fixed_p"] = r.fixed_p;
  j["mean_sld"] = r.mean_sld;
  j["sld_std"] = r.sld_std;
  j["expected_sld"] = r.expected_sld;
  j["mean_tvd"] = r.mean_tvd;
  j["tvd_std"] = r.tvd_std;
  j["tvd_p16"] = r.tvd_p16;
  j["tvd_p84"] = r.tvd_p84;
  return j;
}

std::string ensemble_tvds_to_csv(const EnsembleReport& r) {
  std::ostringstream out;
  out << "sample,tvd\n";
  out.precision(17);
  for (std::size_t i = 0; i < r.tvds.size(); ++i) {
    out << i << "," << r.tvds[i] << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
}

}  // namespace sectorlen
