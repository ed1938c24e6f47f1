#pragma once

#include <functional>
#include <string>
#include <vector>

namespace genproj::cases {

// Where an expected value comes from: a worked example, an immediate
// consequence of a definition, or an independently derived oracle value.
enum class Source { Example, Direct, Derived };

std::string source_name(Source s);

struct CheckLine {
    std::string label;
    bool pass = false;
    std::string expected;
    std::string got;
    Source source = Source::Direct;
};

struct CaseOutcome {
    bool pass = true;
    std::vector<CheckLine> checks;

    void add(const std::string& label, bool ok, const std::string& expected,
             const std::string& got, Source src);
    void expect_true(const std::string& label, bool ok, Source src);
};

struct CaseContext {
    unsigned seed = 20240901;
    int budget = 4;
};

struct CaseInfo {
    std::string id;
    std::string title;
    std::function<CaseOutcome(const CaseContext&)> run;
};

const std::vector<CaseInfo>& registry();
const CaseInfo* find(const std::string& id);

}  // namespace genproj::cases
