#include "hyperlag/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <thread>

#include "hyperlag/parallel.hpp"
#include "json.hpp"

namespace hyperlag::lab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json field_json(const FieldValue& v) {
    return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

ordered_json extra_json(const Fields& fields) {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : fields) out[key] = field_json(value);
    return out;
}

ordered_json record_json(const VerificationRecord& rec) {
    ordered_json j;
    j["campaign"] = rec.campaign;
    j["index"] = rec.index;
    j["r"] = rec.r;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["signature"] = rec.signature;
    j["lambda"] = rec.lambda;
    j["reference"] = rec.reference;
    j["clique"] = rec.clique_order;
    j["pass"] = rec.pass();
    j["tol"] = rec.tolerance;
    j["margin"] = rec.margin;
    for (const auto& [key, value] : rec.extra) j[key] = field_json(value);
    return j;
}

ordered_json summary_json(const CampaignSummary& s) {
    ordered_json j;
    j["campaign"] = s.campaign;
    j["instances"] = s.instances;
    j["passes"] = s.passes;
    j["fails"] = s.fails;
    j["worst_margin"] = s.worst_margin;
    j["seed"] = s.seed;
    return j;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

CampaignSummary CampaignReport::summary() const {
    CampaignSummary s;
    s.campaign = campaign;
    s.seed = seed;
    s.instances = records.size();
    bool first = true;
    for (const auto& rec : records) {
        if (rec.pass()) ++s.passes;
        else ++s.fails;
        s.worst_margin = first ? rec.margin : std::min(s.worst_margin, rec.margin);
        first = false;
    }
    return s;
}

bool CampaignReport::all_passed() const {
    return std::all_of(records.begin(), records.end(), [](const auto& rec) { return rec.pass(); });
}

void write_jsonl(const CampaignReport& report, std::ostream& out) {
    ordered_json header;
    header["campaign"] = report.campaign;
    header["header"] = true;
    if (!report.note.empty()) header["note"] = report.note;
    out << header.dump() << '\n';
    for (const auto& rec : report.records) out << record_json(rec).dump() << '\n';
    out << summary_json(report.summary()).dump() << '\n';
    ordered_json trailer;
    trailer["trailer"] = true;
    trailer["wall_time_seconds"] = report.wall_time_seconds;
    out << trailer.dump() << '\n';
}

void write_csv(const CampaignReport& report, std::ostream& out) {
    if (!report.note.empty()) out << "# " << report.note << '\n';
    out << "campaign,index,r,n,m,signature,lambda,reference,clique,pass,tol,margin,extra\n";
    for (const auto& rec : report.records) {
        std::string sig;
        for (std::size_t k = 0; k < rec.signature.size(); ++k) {
            if (k) sig += ' ';
            sig += std::to_string(rec.signature[k]);
        }
        out << rec.campaign << ',' << rec.index << ',' << rec.r << ',' << rec.n << ',' << rec.m << ','
            << sig << ',' << format_double(rec.lambda) << ',' << format_double(rec.reference) << ','
            << rec.clique_order << ',' << (rec.pass() ? "true" : "false") << ','
            << format_double(rec.tolerance) << ',' << format_double(rec.margin) << ','
            << csv_quote(extra_json(rec.extra).dump()) << '\n';
    }
    out << "# " << summary_line(report.summary()) << '\n';
}

std::string summary_line(const CampaignSummary& s) {
    return summary_json(s).dump();
}

unsigned default_workers() noexcept {
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hyperlag::lab
