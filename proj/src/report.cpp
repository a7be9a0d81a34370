#include "binomid/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "binomid/errors.hpp"

namespace binomid {

Summary summarize(const std::vector<VerificationResult>& results) {
    Summary s;
    s.total = results.size();
    for (const auto& r : results) {
        switch (r.status) {
            case Status::ExactEqual:
                ++s.exact;
                break;
            case Status::NumericEqual:
                ++s.numeric;
                break;
            case Status::Mismatch:
                ++s.mismatch;
                break;
            case Status::Skipped:
                ++s.skipped;
                break;
        }
    }
    return s;
}

namespace {

nlohmann::json result_json(const VerificationResult& r) {
    nlohmann::json binding = nlohmann::json::object();
    for (const auto& [name, value] : r.binding)
        binding[name] = rational_str(value);
    nlohmann::json j{{"id", r.id},
                     {"binding", binding},
                     {"status", status_name(r.status)}};
    if (r.status != Status::Skipped) {
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
    }
    if (r.status == Status::NumericEqual ||
        (r.status == Status::Mismatch && r.relerr != 0))
        j["relerr"] = r.relerr;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

nlohmann::json report_json(const nlohmann::json& config,
                           const std::vector<VerificationResult>& results,
                           bool deterministic) {
    nlohmann::json meta{{"tool", kToolName},
                        {"version", kToolVersion},
                        {"config", config}};
    if (!deterministic) meta["timestamp"] = iso_timestamp();
    nlohmann::json out;
    out["meta"] = meta;
    out["results"] = nlohmann::json::array();
    for (const auto& r : results) out["results"].push_back(result_json(r));
    Summary s = summarize(results);
    out["summary"] = {{"total", s.total},
                      {"exact", s.exact},
                      {"numeric", s.numeric},
                      {"mismatch", s.mismatch},
                      {"skipped", s.skipped}};
    return out;
}

std::string report_markdown(const std::vector<VerificationResult>& results) {
    std::ostringstream os;
    os << "# Verification report\n";
    std::vector<std::string> order;
    for (const auto& r : results) {
        bool seen = false;
        for (const auto& id : order) seen = seen || id == r.id;
        if (!seen) order.push_back(r.id);
    }
    for (const auto& id : order) {
        os << "\n## " << id << "\n\n";
        os << "| binding | status | lhs | rhs | relerr | note |\n";
        os << "|---|---|---|---|---|---|\n";
        for (const auto& r : results) {
            if (r.id != id) continue;
            os << "| " << binding_str(r.binding) << " | "
               << status_name(r.status) << " | " << r.lhs << " | " << r.rhs
               << " | ";
            if (r.status == Status::NumericEqual ||
                r.status == Status::Mismatch)
                os << r.relerr;
            os << " | " << r.note << " |\n";
        }
    }
    Summary s = summarize(results);
    os << "\nTotal " << s.total << ": " << s.exact << " exact, " << s.numeric
       << " numeric, " << s.mismatch << " mismatch, " << s.skipped
       << " skipped.\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << content;
    if (!f) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace binomid
