#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace gbe {

using ItemId = std::uint32_t;

/**
 * @brief Immutable, lexicographically ordered set of item identifiers.
 *
 * Ordinals are contiguous 0..size()-1 and stable for a loaded dataset; all
 * downstream tie-breaking (edge selection, cluster ids, rankings) is anchored
 * to this order.
 */
class ItemCatalog {
public:
    ItemCatalog() = default;

    /// Builds a catalog from any collection of names (sorted, deduplicated).
    static ItemCatalog from_names(const std::set<std::string>& names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(ItemId id) const { return names_.at(id); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<ItemId> find(const std::string& name) const;

    bool operator==(const ItemCatalog& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ItemId> index_;
};

/// One purchase event: a non-empty set of catalog ordinals, stored sorted.
struct Basket {
    int week = 0;                // 1-based week index
    std::vector<ItemId> items;   // sorted, unique

    bool operator==(const Basket& other) const = default;
};

using BasketSet = std::vector<Basket>;

/**
 * @brief Week-indexed basket collections over a fixed catalog.
 *
 * Immutable after construction; safe to read from concurrent workers. Weeks
 * with no baskets are permitted (they contribute nothing to windows).
 */
class WeeklyDataset {
public:
    WeeklyDataset() = default;
    WeeklyDataset(ItemCatalog catalog, std::vector<BasketSet> weeks);

    int horizon() const { return static_cast<int>(weeks_.size()); }  // T
    const ItemCatalog& catalog() const { return catalog_; }
    const BasketSet& week(int t) const;                      // t in [1, T]
    std::size_t basket_count(int t) const;                   // L_t
    std::size_t total_baskets() const;

    bool operator==(const WeeklyDataset& other) const = default;

private:
    ItemCatalog catalog_;
    std::vector<BasketSet> weeks_;  // index t-1
};

enum class InputFormat { Csv, Jsonl };

/**
 * Parses basket rows from CSV (header `week,basket_id,item`) or JSONL
 * (`{"week":..,"basket_id":..,"items":[..]}`). Rows/lines sharing
 * (week, basket_id) merge into one basket with deduplicated items; the
 * catalog is the sorted set of all distinct items seen.
 *
 * Throws ParseError (with line number) on malformed rows, ValidationError on
 * non-positive weeks or empty input.
 */
WeeklyDataset parse_baskets(std::istream& in, InputFormat format);

/// Keeps only items in `keep`; baskets emptied by the restriction are dropped.
WeeklyDataset restrict_category(const WeeklyDataset& ds, const std::set<std::string>& keep);

/// Baskets of the delta_t consecutive weeks ending at t, clipped at week 1.
BasketSet window(const WeeklyDataset& ds, int t, int delta_t);

/// Per-item fraction of baskets containing it, indexed by catalog ordinal.
struct ProportionVector {
    std::vector<double> values;
};

ProportionVector item_proportions(const BasketSet& bs, const ItemCatalog& catalog);

/// Serializes a dataset in the CSV input format (synthetic basket ids).
void write_baskets_csv(std::ostream& out, const WeeklyDataset& ds);

/// Per-week item-proportion feature file: `week,<item...>`, 6 decimal places.
void write_proportions_csv(std::ostream& out, const WeeklyDataset& ds);

}  // namespace gbe
