#pragma once

#include "qct/channels.hpp"
#include "qct/linalg.hpp"
#include "qct/teleport.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <string>

namespace qct::io {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix wire format: [[[re, im], ...], ...] row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// State files: { "d": int, "matrix": [...] }; readers enforce the density
// matrix invariants.
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);
DensityMatrix load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const DensityMatrix& rho);

// Channel files: { "d": int, "operators": [matrix, ...] }; loader enforces
// completeness within 1e-8.
nlohmann::json channel_to_json(const KrausChannel& chan);
KrausChannel channel_from_json(const nlohmann::json& j);
KrausChannel load_channel(const std::filesystem::path& path);
void save_channel(const std::filesystem::path& path, const KrausChannel& chan);

nlohmann::json outcome_to_json(const TeleportOutcome& outcome);

// Writes via a temp file in the target directory plus rename.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// 9 significant digits; below the test tolerances, above display noise.
std::string format_real(double v);

} // namespace qct::io
