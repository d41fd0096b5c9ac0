#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simsim/integer_matrix.hpp"

namespace simsim {

/// Rank of a free abelian group: finite, or countably infinite (absorbing under +).
class Rank {
public:
    Rank(std::uint64_t value = 0) : value_(value) {}  // NOLINT(google-explicit-constructor)
    static Rank countable() {
        Rank r;
        r.countable_ = true;
        return r;
    }

    bool is_countable() const { return countable_; }
    std::uint64_t value() const { return value_; }
    bool is_zero() const { return !countable_ && value_ == 0; }

    friend Rank operator+(const Rank& a, const Rank& b) {
        if (a.countable_ || b.countable_) return countable();
        return Rank(a.value_ + b.value_);
    }
    friend bool operator==(const Rank&, const Rank&) = default;

    std::string to_string() const;

private:
    std::uint64_t value_ = 0;
    bool countable_ = false;
};

/// "Countable sum of Z^per_index, one copy per element of index_set",
/// e.g. one Z^2 per root of unity.
struct IndexedRank {
    std::string index_set;
    std::uint64_t per_index = 0;

    friend bool operator==(const IndexedRank&, const IndexedRank&) = default;
};

struct GroupEntry {
    Rank rank;
    std::vector<Integer> torsion;  // invariant factors, each >= 2 and dividing the next
    std::optional<IndexedRank> indexed;
    std::optional<std::string> note;  // free-form annotation when not indexed

    bool is_zero() const { return rank.is_zero() && torsion.empty(); }
    /// Display string: "per <index_set>: rank <r>" or the free-form note.
    std::optional<std::string> annotation() const;
    /// Inverse of annotation(): indexed form when the text matches, else a note.
    void set_annotation(const std::optional<std::string>& text);

    friend bool operator==(const GroupEntry&, const GroupEntry&) = default;
};

GroupEntry free_entry(std::uint64_t rank);
GroupEntry countable_entry(const std::string& index_set, std::uint64_t per_index);

/// Direct sum; the indexed bookkeeping survives only when both sides use the
/// same index set (or one side is zero).
GroupEntry direct_sum(const GroupEntry& a, const GroupEntry& b);

/// Degreewise abelian groups; absent degrees are zero.
struct GradedAbelianGroup {
    std::map<int, GroupEntry> degrees;
    std::vector<std::string> warnings;

    /// Entry in degree d, or the zero group.
    GroupEntry at(int d) const;
    /// Stores e at degree d, dropping it when zero. Throws DomainError on malformed torsion.
    void set(int d, GroupEntry e);

    friend bool operator==(const GradedAbelianGroup&, const GradedAbelianGroup&) = default;
};

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a, const GradedAbelianGroup& b);

/// "Z^3 + Z/2" style rendering used in diagnostics.
std::string to_string(const GroupEntry& e);

}  // namespace simsim
