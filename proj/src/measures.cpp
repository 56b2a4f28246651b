#include "rwb/measures.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rwb {

namespace {

constexpr double kWeightSumTol = 1e-9;

void check_finite_point(const Point& p, const std::string& what) {
  for (double c : p.coords)
    if (!std::isfinite(c)) throw InputError(what + ": non-finite coordinate");
}

}  // namespace

double squared_distance(const Point& a, const Point& b) {
  assert(a.dim() == b.dim());
  double s = 0.0;
  for (std::size_t k = 0; k < a.coords.size(); ++k) {
    double d = a.coords[k] - b.coords[k];
    s += d * d;
  }
  return s;
}

double euclidean_distance(const Point& a, const Point& b) {
  return std::sqrt(squared_distance(a, b));
}

DiscreteMeasure::DiscreteMeasure(std::vector<Point> locs, std::vector<double> w)
    : locations(std::move(locs)), weights(std::move(w)) {
  if (locations.empty()) throw InputError("measure: needs at least one atom");
  if (locations.size() != weights.size())
    throw InputError("measure: locations and weights length mismatch");
  std::size_t d = locations[0].dim();
  double sum = 0.0;
  for (std::size_t i = 0; i < locations.size(); ++i) {
    if (locations[i].dim() != d) throw InputError("measure: inconsistent point dimensions");
    check_finite_point(locations[i], "measure");
    if (!(weights[i] >= 0.0)) throw InputError("measure: negative or NaN weight");
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    std::ostringstream os;
    os << "measure: weights sum to " << sum << ", expected 1 within " << kWeightSumTol;
    throw InputError(os.str());
  }
}

DiscreteMeasure DiscreteMeasure::renormalized() const {
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (!(sum > 0.0)) throw InputError("renormalize: total weight is zero");
  std::vector<double> w(weights);
  for (double& x : w) x /= sum;
  return DiscreteMeasure(locations, std::move(w));
}

DiscreteMeasure dirac(Point x) { return DiscreteMeasure({std::move(x)}, {1.0}); }

WeightedMeasureSet::WeightedMeasureSet(std::vector<DiscreteMeasure> ms, std::vector<double> ws)
    : measures(std::move(ms)), set_weights(std::move(ws)) {
  if (measures.empty()) throw InputError("measure set: empty");
  if (measures.size() != set_weights.size())
    throw InputError("measure set: measures and set_weights length mismatch");
  for (double w : set_weights)
    if (!(w > 0.0) || !std::isfinite(w))
      throw InputError("measure set: set_weights must be positive and finite");
}

WeightedMeasureSet::WeightedMeasureSet(std::vector<DiscreteMeasure> ms)
    : measures(std::move(ms)), set_weights(measures.size(), 1.0) {
  if (measures.empty()) throw InputError("measure set: empty");
}

double WeightedMeasureSet::total_weight() const {
  double s = 0.0;
  for (double w : set_weights) s += w;
  return s;
}

CostMatrix build_cost_matrix(const std::vector<Point>& xs, const std::vector<Point>& ys,
                             double z) {
  if (xs.empty() || ys.empty()) throw InputError("cost matrix: empty point set");
  if (!(z >= 1.0)) throw InputError("cost matrix: exponent z must be >= 1");
  std::size_t d = xs[0].dim();
  for (const auto& p : xs)
    if (p.dim() != d) throw InputError("cost matrix: point dimension mismatch");
  for (const auto& q : ys)
    if (q.dim() != d) throw InputError("cost matrix: point dimension mismatch");

  CostMatrix cm;
  cm.exponent = z;
  cm.entries = Matrix(xs.size(), ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      double d2 = squared_distance(xs[i], ys[j]);
      double c;
      if (z == 2.0)
        c = d2;
      else if (z == 1.0)
        c = std::sqrt(d2);
      else
        c = std::pow(d2, z / 2.0);
      cm.entries(i, j) = c;
    }
  }
  return cm;
}

// --- JSON ------------------------------------------------------------------

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
}

std::vector<Point> points_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": \"points\" must be an array");
  std::vector<Point> pts;
  pts.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    if (!row.is_array()) throw ParseError(path + ": point " + std::to_string(i) + " not an array");
    std::vector<double> c;
    c.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number())
        throw ParseError(path + ": point " + std::to_string(i) + " has a non-numeric coordinate");
      double x = v.get<double>();
      if (!std::isfinite(x))
        throw ParseError(path + ": point " + std::to_string(i) + " has a non-finite coordinate");
      c.push_back(x);
    }
    pts.emplace_back(std::move(c));
  }
  return pts;
}

DiscreteMeasure measure_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("points") || !j.contains("weights"))
    throw ParseError(path + ": measure needs \"points\" and \"weights\"");
  std::vector<Point> pts = points_from_json(j["points"], path);
  const auto& jw = j["weights"];
  if (!jw.is_array()) throw ParseError(path + ": \"weights\" must be an array");
  std::vector<double> w;
  w.reserve(jw.size());
  for (const auto& v : jw) {
    if (!v.is_number()) throw ParseError(path + ": non-numeric weight");
    w.push_back(v.get<double>());
  }
  try {
    return DiscreteMeasure(std::move(pts), std::move(w));
  } catch (const InputError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json measure_to_json(const DiscreteMeasure& m) {
  json jp = json::array();
  for (const auto& p : m.locations) jp.push_back(p.coords);
  return json{{"points", std::move(jp)}, {"weights", m.weights}};
}

}  // namespace

DiscreteMeasure load_measure(const std::string& path) {
  return measure_from_json(read_json_file(path), path);
}

void save_measure(const DiscreteMeasure& m, const std::string& path) {
  write_json_file(measure_to_json(m), path);
}

WeightedMeasureSet load_dataset(const std::string& path) {
  json j = read_json_file(path);
  if (!j.is_object() || !j.contains("measures"))
    throw ParseError(path + ": dataset needs a \"measures\" array");
  const auto& jm = j["measures"];
  if (!jm.is_array() || jm.empty()) throw ParseError(path + ": \"measures\" must be non-empty");
  std::vector<DiscreteMeasure> ms;
  ms.reserve(jm.size());
  for (const auto& one : jm) ms.push_back(measure_from_json(one, path));
  std::vector<double> ws;
  if (j.contains("set_weights")) {
    const auto& jw = j["set_weights"];
    if (!jw.is_array()) throw ParseError(path + ": \"set_weights\" must be an array");
    for (const auto& v : jw) {
      if (!v.is_number()) throw ParseError(path + ": non-numeric set weight");
      ws.push_back(v.get<double>());
    }
  } else {
    ws.assign(ms.size(), 1.0);
  }
  try {
    return WeightedMeasureSet(std::move(ms), std::move(ws));
  } catch (const InputError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_dataset(const WeightedMeasureSet& ds, const std::string& path) {
  json jm = json::array();
  for (const auto& m : ds.measures) jm.push_back(measure_to_json(m));
  write_json_file(json{{"measures", std::move(jm)}, {"set_weights", ds.set_weights}}, path);
}

std::vector<Point> load_points(const std::string& path) {
  json j = read_json_file(path);
  if (!j.is_object() || !j.contains("points"))
    throw ParseError(path + ": needs a \"points\" array");
  std::vector<Point> pts = points_from_json(j["points"], path);
  if (pts.empty()) throw ParseError(path + ": empty \"points\" array");
  std::size_t d = pts[0].dim();
  for (const auto& p : pts)
    if (p.dim() != d) throw ParseError(path + ": inconsistent point dimensions");
  return pts;
}

}  // namespace rwb
