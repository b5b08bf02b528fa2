#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdiv {

/// Compared designs. The first four are modeled only through their published
/// closed-form costs; the proposed pair doubles as a consistency check
/// against measured gate counts.
enum class Design {
    Khosropour,
    Dibbo,
    Jamal1,
    Jamal2,
    ProposedRestoring,
    ProposedNonRestoring,
};

inline std::string design_id(Design design) {
    switch (design) {
    case Design::Khosropour: return "khosropour";
    case Design::Dibbo: return "dibbo";
    case Design::Jamal1: return "jamal1";
    case Design::Jamal2: return "jamal2";
    case Design::ProposedRestoring: return "proposed_restoring";
    case Design::ProposedNonRestoring: return "proposed_nonrestoring";
    }
    return "?";
}

/// Designs whose published T-count rows carry an approximation marker.
inline bool tcount_is_approx(Design design) {
    return design == Design::Khosropour || design == Design::Dibbo;
}

inline bool qubits_are_approx(Design design) { return design == Design::Dibbo; }

inline void check_width(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("baseline models need n >= 2");
    }
}

inline std::uint64_t model_tcount(Design design, std::uint64_t n) {
    check_width(n);
    switch (design) {
    case Design::Khosropour: return 400 * n * n;
    case Design::Dibbo: return 9 * n * n * n;
    case Design::Jamal1: return 28 * n * n;
    case Design::Jamal2: return 42 * n * n + 28 * n;
    case Design::ProposedRestoring: return 35 * n * n - 28 * n;
    case Design::ProposedNonRestoring: return 14 * n * n + 7 * n - 35;
    }
    return 0;
}

inline std::uint64_t model_qubits(Design design, std::uint64_t n) {
    check_width(n);
    switch (design) {
    case Design::Khosropour: return 4 * n;
    case Design::Dibbo: return n * n * n / 2 + 4 * n;
    case Design::Jamal1: return 2 * n * n + 5 * n - 1;
    case Design::Jamal2: return 3 * n * n + 14 * n;
    case Design::ProposedRestoring: return 3 * n;
    case Design::ProposedNonRestoring: return 3 * n - 1;
    }
    return 0;
}

/// T-depth models; designs without a published closed form return nullopt.
inline std::optional<std::uint64_t> model_tdepth(Design design, std::uint64_t n) {
    check_width(n);
    switch (design) {
    case Design::Khosropour: return 130 * n;
    case Design::ProposedRestoring: return 23 * n;
    case Design::ProposedNonRestoring: return 10 * n + 13;
    default: return std::nullopt;
    }
}

/// (1 - proposed/baseline) * 100.
inline double improvement(double baseline_value, double proposed_value) {
    if (baseline_value <= 0) {
        throw std::invalid_argument("improvement needs a positive baseline");
    }
    return (1.0 - proposed_value / baseline_value) * 100.0;
}

inline std::string format2(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << value;
    return out.str();
}

// ------------------------------------------------------------------- tables

enum class TableId {
    RestoringTCount,
    RestoringQubits,
    NonRestoringTCount,
    NonRestoringQubits,
    SummaryRestoring,
    SummaryNonRestoring,
};

inline std::optional<TableId> table_id_from_name(const std::string& name) {
    if (name == "restoring-tcount") return TableId::RestoringTCount;
    if (name == "restoring-qubits") return TableId::RestoringQubits;
    if (name == "nonrestoring-tcount") return TableId::NonRestoringTCount;
    if (name == "nonrestoring-qubits") return TableId::NonRestoringQubits;
    if (name == "summary-restoring") return TableId::SummaryRestoring;
    if (name == "summary-nonrestoring") return TableId::SummaryNonRestoring;
    return std::nullopt;
}

struct Table {
    std::string id;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

inline const std::vector<std::uint64_t>& table_widths() {
    static const std::vector<std::uint64_t> widths = {4, 8, 16, 32, 64, 128, 256, 512};
    return widths;
}

/// Notes on cells of the published tables that disagree with their own rows
/// or with each other; the models adopt the row-consistent form.
inline std::vector<std::string> discrepancy_notes() {
    return {
        "nonrestoring t-count: the published summary row prints 14·n²+7·n+7; the published "
        "per-n rows and the block sum (14n-14) + (n-1)(14n-14) + 21(n-1)-14 give "
        "14·n²+7·n-35, which is the model used here.",
        "restoring qubits: the published average for the dibbo column is 93.94, but the "
        "column's own rows average to 95.45; the recomputed value is emitted.",
        "ctrl-add t-count: the published step list quotes both 21·n-21 and 21·n-14 for a "
        "width-n block; every table row is consistent only with 21·n-14, which is the "
        "model used here (the non-restoring correction step uses a width n-1 block).",
        "restoring t-count: one published derivation line states n·(35·n-18); the adopted "
        "total 35·n²-28·n matches the published per-iteration cost and every table row.",
    };
}

namespace detail {

inline std::string approx(std::uint64_t value) { return "~" + std::to_string(value); }

inline std::string plain(std::uint64_t value) { return std::to_string(value); }

inline std::string value_cell(Design design, std::uint64_t n, bool qubits) {
    const std::uint64_t v = qubits ? model_qubits(design, n) : model_tcount(design, n);
    const bool is_approx = qubits ? qubits_are_approx(design) : tcount_is_approx(design);
    return is_approx ? approx(v) : plain(v);
}

inline Table comparison_table(const std::string& id, const std::vector<Design>& baselines,
                              Design proposed, bool qubits) {
    Table table;
    table.id = id;
    table.columns.push_back("n");
    for (Design d : baselines) {
        table.columns.push_back(design_id(d));
    }
    table.columns.push_back("proposed");
    for (Design d : baselines) {
        table.columns.push_back("% impr. w.r.t. " + design_id(d));
    }
    std::vector<double> sums(baselines.size(), 0.0);
    for (std::uint64_t n : table_widths()) {
        std::vector<std::string> row;
        row.push_back(std::to_string(n));
        const std::uint64_t prop = qubits ? model_qubits(proposed, n) : model_tcount(proposed, n);
        for (Design d : baselines) {
            row.push_back(value_cell(d, n, qubits));
        }
        row.push_back(plain(prop));
        for (std::size_t i = 0; i < baselines.size(); ++i) {
            const std::uint64_t base =
                qubits ? model_qubits(baselines[i], n) : model_tcount(baselines[i], n);
            const double impr = improvement(static_cast<double>(base), static_cast<double>(prop));
            sums[i] += impr;
            row.push_back(format2(impr));
        }
        table.rows.push_back(std::move(row));
    }
    std::vector<std::string> avg(table.columns.size());
    avg[0] = "average";
    for (std::size_t i = 0; i < baselines.size(); ++i) {
        avg[baselines.size() + 2 + i] = format2(sums[i] / static_cast<double>(table_widths().size()));
    }
    table.rows.push_back(std::move(avg));
    return table;
}

inline Table summary_table(const std::string& id, bool restoring) {
    Table table;
    table.id = id;
    if (restoring) {
        table.columns = {"metric", "khosropour", "dibbo", "proposed"};
        table.rows = {
            {"t_count", "~400·n²", "~9·n³", "35·n²-28·n"},
            {"t_depth", "130·n", "NA", "23·n"},
            {"qubits", "4·n", "~½·n³+4·n", "3·n"},
        };
    } else {
        table.columns = {"metric", "jamal1", "jamal2", "dibbo", "proposed"};
        table.rows = {
            {"t_count", "28·n²", "42·n²+28·n", "~9·n³", "14·n²+7·n-35"},
            {"t_depth", "NA", "NA", "NA", "10·n+13"},
            {"qubits", "2·n²+5·n-1", "3·n²+14·n", "~½·n³+4·n", "3·n-1"},
        };
    }
    return table;
}

} // namespace detail

inline Table reproduce_table(TableId id, bool with_ledger = false) {
    Table table;
    switch (id) {
    case TableId::RestoringTCount:
        table = detail::comparison_table("restoring-tcount", {Design::Khosropour, Design::Dibbo},
                                         Design::ProposedRestoring, false);
        break;
    case TableId::RestoringQubits:
        table = detail::comparison_table("restoring-qubits", {Design::Khosropour, Design::Dibbo},
                                         Design::ProposedRestoring, true);
        break;
    case TableId::NonRestoringTCount:
        table = detail::comparison_table("nonrestoring-tcount",
                                         {Design::Jamal1, Design::Jamal2, Design::Dibbo},
                                         Design::ProposedNonRestoring, false);
        break;
    case TableId::NonRestoringQubits:
        table = detail::comparison_table("nonrestoring-qubits",
                                         {Design::Jamal1, Design::Jamal2, Design::Dibbo},
                                         Design::ProposedNonRestoring, true);
        break;
    case TableId::SummaryRestoring:
        table = detail::summary_table("summary-restoring", true);
        break;
    case TableId::SummaryNonRestoring:
        table = detail::summary_table("summary-nonrestoring", false);
        break;
    }
    if (with_ledger) {
        table.notes = discrepancy_notes();
    }
    return table;
}

inline std::string render_markdown(const Table& table) {
    std::ostringstream out;
    out << "| ";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << table.columns[i] << " |";
        if (i + 1 < table.columns.size()) {
            out << " ";
        }
    }
    out << "\n|";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << "---|";
    }
    out << "\n";
    for (const auto& row : table.rows) {
        out << "| ";
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i] << " |";
            if (i + 1 < row.size()) {
                out << " ";
            }
        }
        out << "\n";
    }
    for (const auto& note : table.notes) {
        out << "\n> " << note << "\n";
    }
    return out.str();
}

inline std::string render_csv(const Table& table) {
    std::ostringstream out;
    auto emit_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                out << ",";
            }
            if (cells[i].find(',') != std::string::npos) {
                out << '"' << cells[i] << '"';
            } else {
                out << cells[i];
            }
        }
        out << "\n";
    };
    emit_row(table.columns);
    for (const auto& row : table.rows) {
        emit_row(row);
    }
    for (const auto& note : table.notes) {
        out << "# " << note << "\n";
    }
    return out.str();
}

} // namespace qdiv
