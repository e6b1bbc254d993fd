#pragma once

#include "fuchsian/genus.hpp"
#include "fuchsian/sympow.hpp"

#include <optional>
#include <string>

#include "json.hpp"

namespace fuchsian {

inline constexpr const char *kReportSchema = "fuchsian-report/1";

enum class Format { Json, Text };

struct Report {
    nlohmann::ordered_json json;
    std::string text;

    std::string render(Format f) const;
};

nlohmann::ordered_json place_json(const Place &p, std::string_view var);

Report equation_report(const std::string &command, const LinearODE &L);
Report analyze_report(const LinearODE &L, std::optional<long> group_order = std::nullopt);
Report genus_command_report(const LinearODE &L, long M, long g0, const std::vector<Place> &extra);
Report equivalence_report(const LinearODE &L1, const LinearODE &L2);
Report rational_solutions_report(const LinearODE &L, const InvariantBasis &basis);
Report ruled_report(const StandardEquationSpec &spec, const RuledSurfaceDescriptor &r);
Report catalog_report();
Report catalog_entry_report(const std::string &key);

}  // namespace fuchsian
