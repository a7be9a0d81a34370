#ifndef BINOMID_REPORT_HPP
#define BINOMID_REPORT_HPP

#include <string>
#include <vector>

#include "binomid/eval.hpp"

#include "json.hpp"

namespace binomid {

inline constexpr const char* kToolName = "binomid";
inline constexpr const char* kToolVersion = "1.0.0";

struct Summary {
    std::size_t total = 0;
    std::size_t exact = 0;
    std::size_t numeric = 0;
    std::size_t mismatch = 0;
    std::size_t skipped = 0;
};

Summary summarize(const std::vector<VerificationResult>& results);

// {"meta": {...config...}, "results": [...], "summary": {...}}. The meta
// timestamp is omitted when deterministic is set, so identical configs
// produce byte-identical reports.
nlohmann::json report_json(const nlohmann::json& config,
                           const std::vector<VerificationResult>& results,
                           bool deterministic);

// Human-readable table, grouped by identity in order of first appearance.
std::string report_markdown(const std::vector<VerificationResult>& results);

// Writes content to path; throws IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace binomid

#endif
