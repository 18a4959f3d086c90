#include "jetcomplex/report.hpp"

#include <json.hpp>

#include <sstream>

namespace jetcomplex {

using nlohmann::json;

ReportDocument::Section& ReportDocument::current() {
    if (sections_.empty()) sections_.push_back({"report", {}});
    return sections_.back();
}

void ReportDocument::meta(const std::string& key, const std::string& value) {
    meta_.push_back({key, value});
}

void ReportDocument::begin_section(const std::string& title) { sections_.push_back({title, {}}); }

void ReportDocument::line(const std::string& text) {
    current().entries.push_back({Entry::Kind::Line, text, "", true});
}

void ReportDocument::kv(const std::string& key, const std::string& value) {
    current().entries.push_back({Entry::Kind::KV, key, value, true});
}

void ReportDocument::verdict(const std::string& name, bool pass, const std::string& detail) {
    current().entries.push_back({Entry::Kind::Verdict, name, detail, pass});
}

void ReportDocument::classification(const std::string& name, const std::string& value) {
    current().entries.push_back({Entry::Kind::Classification, name, value, true});
}

void ReportDocument::flag_cutoff(const std::string& why) { cutoff_reasons_.push_back(why); }

bool ReportDocument::all_passed() const {
    for (const auto& s : sections_)
        for (const auto& e : s.entries)
            if (e.kind == Entry::Kind::Verdict && !e.pass) return false;
    return true;
}

std::string ReportDocument::to_text() const {
    std::ostringstream os;
    if (!meta_.empty()) {
        for (const auto& [k, v] : meta_) os << "# " << k << ": " << v << "\n";
        os << "\n";
    }
    for (const auto& s : sections_) {
        os << "== " << s.title << " ==\n";
        for (const auto& e : s.entries) {
            switch (e.kind) {
                case Entry::Kind::Line:
                    os << "  " << e.a << "\n";
                    break;
                case Entry::Kind::KV:
                    os << "  " << e.a << ": " << e.b << "\n";
                    break;
                case Entry::Kind::Verdict:
                    os << "  [" << (e.pass ? "PASS" : "FAIL") << "] " << e.a;
                    if (!e.b.empty()) os << " (" << e.b << ")";
                    os << "\n";
                    break;
                case Entry::Kind::Classification:
                    os << "  " << e.a << ": " << e.b << "\n";
                    break;
            }
        }
        os << "\n";
    }
    for (const auto& why : cutoff_reasons_) os << "! cutoff: " << why << "\n";
    return os.str();
}

std::string ReportDocument::to_json() const {
    json doc;
    doc["meta"] = json::object();
    for (const auto& [k, v] : meta_) doc["meta"][k] = v;
    doc["sections"] = json::array();
    for (const auto& s : sections_) {
        json sec;
        sec["title"] = s.title;
        sec["entries"] = json::array();
        for (const auto& e : s.entries) {
            json entry;
            switch (e.kind) {
                case Entry::Kind::Line:
                    entry["type"] = "line";
                    entry["text"] = e.a;
                    break;
                case Entry::Kind::KV:
                    entry["type"] = "kv";
                    entry["key"] = e.a;
                    entry["value"] = e.b;
                    break;
                case Entry::Kind::Verdict:
                    entry["type"] = "verdict";
                    entry["name"] = e.a;
                    entry["pass"] = e.pass;
                    entry["detail"] = e.b;
                    break;
                case Entry::Kind::Classification:
                    entry["type"] = "classification";
                    entry["name"] = e.a;
                    entry["value"] = e.b;
                    break;
            }
            sec["entries"].push_back(entry);
        }
        doc["sections"].push_back(sec);
    }
    doc["all_passed"] = all_passed();
    doc["cutoff"] = json::array();
    for (const auto& why : cutoff_reasons_) doc["cutoff"].push_back(why);
    return doc.dump(2);
}

}  // namespace jetcomplex
