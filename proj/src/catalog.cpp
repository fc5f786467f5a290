#include <map>

#include "wildrep/errors.hpp"
#include "wildrep/report.hpp"

namespace wildrep {

namespace {

// Modified standard classes with distinct small rational parameters and symbolic eigenvalues.
const std::map<std::string, std::string>& sources() {
    static const std::map<std::string, std::string> s{
        {"PI", "class PI {\n  at inf: <x^(5/2)> #1 {t1:[1]};\n}\n"},
        {"PII", "class PII {\n  at inf: <x^(3)> #1 {t1:[1]}, <0> #1 {t2:[1]};\n}\n"},
        {"PIII2",
         "class PIII2 {\n  at inf: <x> #1 {t1:[1]}, <2*x> #1 {t2:[1]};\n  at 0: <3*x> #1 {t3:[1]};\n}\n"},
        {"PIII1", "class PIII1 {\n  at inf: <2*x^(1/2)> #1 {t1:[1]};\n  at 0: <x> #1 {t2:[1]};\n}\n"},
        {"PIII0", "class PIII0 {\n  at inf: <x^(1/2)> #1 {t1:[1]};\n  at 0: <2*x^(1/2)> #1 {t2:[1]};\n}\n"},
        {"PIV",
         "class PIV {\n  at inf: <x^(2)> #1 {t1:[1]}, <2*x^(2)> #1 {t2:[1]};\n  at 0: <0> #1 {t3:[1]};\n}\n"},
        {"PV",
         "class PV {\n  at inf: <x> #1 {t1:[1]}, <2*x> #1 {t2:[1]};\n  at 0: <0> #1 {t3:[1]};\n"
         "  at 1: <0> #1 {t4:[1]};\n}\n"},
        {"PVI",
         "class PVI {\n  at inf: <0> #2 {t1:[1]; t2:[1]};\n  at 0: <0> #1 {t3:[1]};\n"
         "  at 1: <0> #1 {t4:[1]};\n  at 2: <0> #1 {t5:[1]};\n}\n"},
    };
    return s;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"PI", "PII", "PIII2", "PIII1", "PIII0", "PIV", "PV", "PVI"};
    return names;
}

const std::string& catalog_source(const std::string& name) {
    auto it = sources().find(name);
    if (it == sources().end()) throw SemanticError("unknown catalog entry '" + name + "'");
    return it->second;
}

Report catalog_report(const std::string& name) { return analyze(parse_dsl(catalog_source(name))); }

}  // namespace wildrep
