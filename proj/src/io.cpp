#include "qct/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qct::io {

using nlohmann::json;

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix: expected a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw SchemaError("matrix: row 0 is not a nonempty array");
  const int cols = static_cast<int>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw SchemaError("matrix: row " + std::to_string(r) + " has inconsistent length");
    for (int c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw SchemaError("matrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") is not an [re, im] pair");
      m(r, c) = Cx{e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

json state_to_json(const DensityMatrix& rho) {
  return json{{"d", rho.dim()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("matrix"))
    throw SchemaError("state: expected object with fields \"d\" and \"matrix\"");
  if (!j["d"].is_number_integer()) throw SchemaError("state: field \"d\" must be an integer");
  const int d = j["d"].get<int>();
  ComplexMatrix m = matrix_from_json(j["matrix"]);
  if (m.rows() != d || m.cols() != d)
    throw SchemaError("state: field \"matrix\" is not d x d for d = " + std::to_string(d));
  auto result = check_density(m);
  if (!result.ok()) throw SchemaError("state: " + result.violation->describe());
  return std::move(*result.state);
}

namespace {

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
  return j;
}

} // namespace

DensityMatrix load_state(const std::filesystem::path& path) {
  return state_from_json(parse_file(path));
}

void save_state(const std::filesystem::path& path, const DensityMatrix& rho) {
  atomic_write(path, state_to_json(rho).dump(2) + "\n");
}

json channel_to_json(const KrausChannel& chan) {
  json ops = json::array();
  for (const auto& e : chan.ops) ops.push_back(matrix_to_json(e));
  return json{{"d", chan.d}, {"operators", std::move(ops)}};
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("operators"))
    throw SchemaError("channel: expected object with fields \"d\" and \"operators\"");
  if (!j["d"].is_number_integer()) throw SchemaError("channel: field \"d\" must be an integer");
  const int d = j["d"].get<int>();
  if (!j["operators"].is_array() || j["operators"].empty())
    throw SchemaError("channel: field \"operators\" must be a nonempty array");
  std::vector<ComplexMatrix> ops;
  for (const auto& op : j["operators"]) ops.push_back(matrix_from_json(op));
  try {
    return custom_channel(d, std::move(ops));
  } catch (const std::exception& e) {
    throw SchemaError(std::string("channel: ") + e.what());
  }
}

KrausChannel load_channel(const std::filesystem::path& path) {
  return channel_from_json(parse_file(path));
}

void save_channel(const std::filesystem::path& path, const KrausChannel& chan) {
  atomic_write(path, channel_to_json(chan).dump(2) + "\n");
}

json outcome_to_json(const TeleportOutcome& outcome) {
  json j{{"d", outcome.d},
         {"x", outcome.x},
         {"y", outcome.y},
         {"probability", outcome.probability},
         {"coherence_in", outcome.coherence_in},
         {"coherence_out", outcome.coherence_out},
         {"bob_state", matrix_to_json(outcome.bob_state.matrix())}};
  if (outcome.efficiency)
    j["efficiency"] = *outcome.efficiency;
  else
    j["efficiency"] = nullptr;
  return j;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

} // namespace qct::io
