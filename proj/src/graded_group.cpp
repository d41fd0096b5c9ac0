#include "simsim/graded_group.hpp"

#include <algorithm>
#include <regex>

#include "simsim/error.hpp"

namespace simsim {

std::string Rank::to_string() const { return countable_ ? std::string("countable") : std::to_string(value_); }

std::optional<std::string> GroupEntry::annotation() const {
    if (indexed) return "per " + indexed->index_set + ": rank " + std::to_string(indexed->per_index);
    return note;
}

void GroupEntry::set_annotation(const std::optional<std::string>& text) {
    indexed.reset();
    note.reset();
    if (!text) return;
    static const std::regex pattern(R"(^per (.+): rank ([0-9]+)$)");
    std::smatch m;
    if (std::regex_match(*text, m, pattern))
        indexed = IndexedRank{m[1].str(), std::stoull(m[2].str())};
    else
        note = *text;
}

GroupEntry free_entry(std::uint64_t rank) { return GroupEntry{Rank(rank), {}, std::nullopt, std::nullopt}; }

GroupEntry countable_entry(const std::string& index_set, std::uint64_t per_index) {
    return GroupEntry{Rank::countable(), {}, IndexedRank{index_set, per_index}, std::nullopt};
}

GroupEntry direct_sum(const GroupEntry& a, const GroupEntry& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    GroupEntry out;
    out.rank = a.rank + b.rank;
    std::vector<Integer> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    out.torsion = normalize_torsion(orders);
    if (a.indexed && b.indexed && a.indexed->index_set == b.indexed->index_set && a.torsion.empty() &&
        b.torsion.empty())
        out.indexed = IndexedRank{a.indexed->index_set, a.indexed->per_index + b.indexed->per_index};
    return out;
}

GroupEntry GradedAbelianGroup::at(int d) const {
    auto it = degrees.find(d);
    return it == degrees.end() ? GroupEntry{} : it->second;
}

void GradedAbelianGroup::set(int d, GroupEntry e) {
    for (std::size_t i = 0; i < e.torsion.size(); ++i) {
        if (e.torsion[i] < 2) throw DomainError("torsion entries must be >= 2");
        if (i > 0 && e.torsion[i] % e.torsion[i - 1] != 0)
            throw DomainError("torsion entries must form a divisibility chain");
    }
    if (e.is_zero())
        degrees.erase(d);
    else
        degrees[d] = std::move(e);
}

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
    GradedAbelianGroup out = a;
    for (const auto& [d, e] : b.degrees) out.set(d, direct_sum(out.at(d), e));
    for (const auto& w : b.warnings)
        if (std::find(out.warnings.begin(), out.warnings.end(), w) == out.warnings.end()) out.warnings.push_back(w);
    return out;
}

std::string to_string(const GroupEntry& e) {
    if (e.is_zero()) return "0";
    std::string out;
    if (!e.rank.is_zero()) out = e.rank.is_countable() ? "Z^countable" : "Z^" + std::to_string(e.rank.value());
    for (const auto& t : e.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.str();
    }
    return out;
}

}  // namespace simsim
