#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jlab/asymptotic.hpp"
#include "jlab/classify.hpp"
#include "jlab/fiber.hpp"
#include "jlab/pertinent.hpp"
#include "jlab/sweep.hpp"

namespace jlab {

/// Top-level machine-readable report. Sections not produced by a command are
/// serialized as null. All exact scalars appear as strings ("p/q" or
/// "p/q+r/s i"); curves as exact coefficient lists in z.
struct Report {
    std::string map_name;
    std::optional<PolyMap> map;
    std::optional<GoodMapReport> good;
    std::optional<NzcVerdict> nzc;
    std::optional<ClassReport> classification;
    std::optional<std::vector<AsymptoticCurve>> curves;
    int inexact_roots_skipped = 0;
    std::optional<DominanceReport> dominance;
    std::optional<Fiber> fiber;

    std::string to_json() const;
};

std::string sweep_report_to_json(const SweepReport& report);

}  // namespace jlab
