// Structured analysis reports: sections of lines/key-values, check verdicts
// that drive the exit code, and classifications that do not. Renders as
// plain text or JSON.
#pragma once

#include <string>
#include <vector>

namespace jetcomplex {

class ReportDocument {
  public:
    void meta(const std::string& key, const std::string& value);
    void begin_section(const std::string& title);
    void line(const std::string& text);
    void kv(const std::string& key, const std::string& value);

    // A pass/fail check; any failure makes the whole run fail.
    void verdict(const std::string& name, bool pass, const std::string& detail = "");
    // A reported outcome that is an answer, not a check (e.g. "involutive").
    void classification(const std::string& name, const std::string& value);

    void flag_cutoff(const std::string& why);

    bool all_passed() const;
    bool cutoff_flagged() const { return !cutoff_reasons_.empty(); }

    std::string to_text() const;
    std::string to_json() const;

  private:
    struct Entry {
        enum class Kind { Line, KV, Verdict, Classification } kind;
        std::string a, b;
        bool pass = true;
    };
    struct Section {
        std::string title;
        std::vector<Entry> entries;
    };
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<Section> sections_;
    std::vector<std::string> cutoff_reasons_;

    Section& current();
};

}  // namespace jetcomplex
