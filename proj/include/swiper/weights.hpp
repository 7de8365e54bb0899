#pragma once

#include "swiper/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace swiper {

struct Party {
    std::string id;
    Rational weight;

    bool operator==(const Party& other) const = default;
};

enum class WeightFormat { Csv, Json };

/// Snapshot of the real weights w_1..w_n. Immutable after construction;
/// file order defines the canonical party index, which every deterministic
/// tie-break in the toolkit refers to.
class WeightDistribution {
  public:
    explicit WeightDistribution(std::vector<Party> parties) : parties_(std::move(parties)) {
        if (parties_.empty()) {
            throw std::invalid_argument("weight distribution has no parties");
        }
        std::unordered_set<std::string_view> seen;
        for (const Party& p : parties_) {
            if (p.id.empty()) {
                throw std::invalid_argument("empty party id");
            }
            if (p.id.find(',') != std::string::npos || p.id.find('\n') != std::string::npos) {
                throw std::invalid_argument("party id may not contain ',' or newline: '" + p.id + "'");
            }
            if (!seen.insert(p.id).second) {
                throw std::invalid_argument("duplicate party id: '" + p.id + "'");
            }
            if (p.weight < 0) {
                throw std::invalid_argument("negative weight for party '" + p.id + "'");
            }
            total_ += p.weight;
        }
        if (total_ == 0) {
            throw std::invalid_argument("all weights are zero; total weight must be positive");
        }
    }

    std::size_t size() const { return parties_.size(); }
    const Party& party(std::size_t i) const { return parties_.at(i); }
    const Rational& weight(std::size_t i) const { return parties_.at(i).weight; }
    std::span<const Party> parties() const { return parties_; }
    const Rational& total_weight() const { return total_; }

    bool operator==(const WeightDistribution& other) const { return parties_ == other.parties_; }

    /// CSV rows "id,weight"; an optional header line is skipped. Weight is a
    /// decimal or "p/q" literal. Errors carry the 1-based line number.
    static WeightDistribution from_csv(std::istream& in) {
        std::vector<Party> parties;
        std::string line;
        std::size_t lineno = 0;
        bool first_data_line = true;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::string_view row = detail::trim(line);
            if (row.empty()) continue;
            const std::size_t comma = row.find(',');
            if (comma == std::string_view::npos) {
                throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'id,weight'");
            }
            const std::string id{detail::trim(row.substr(0, comma))};
            const std::string_view weight_field = detail::trim(row.substr(comma + 1));
            Rational weight;
            try {
                weight = parse_rational(weight_field);
            } catch (const std::invalid_argument& e) {
                if (first_data_line) {
                    // header line such as "id,weight"
                    first_data_line = false;
                    continue;
                }
                throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
            }
            first_data_line = false;
            if (weight < 0) {
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": negative weight for party '" + id + "'");
            }
            parties.push_back(Party{id, std::move(weight)});
        }
        return WeightDistribution(std::move(parties));
    }

    /// JSON array of {"id": string, "weight": string|integer}. Weights must
    /// be strings or integers; JSON floats are rejected to keep parsing exact.
    static WeightDistribution from_json(std::istream& in) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_array()) {
            throw std::runtime_error("weight JSON must be an array of {id, weight} objects");
        }
        std::vector<Party> parties;
        parties.reserve(doc.size());
        for (std::size_t i = 0; i < doc.size(); ++i) {
            const auto& entry = doc[i];
            if (!entry.is_object() || !entry.contains("id") || !entry.contains("weight") ||
                !entry["id"].is_string()) {
                throw std::runtime_error("entry " + std::to_string(i) +
                                         ": expected {\"id\": string, \"weight\": string}");
            }
            const auto& w = entry["weight"];
            Rational weight;
            if (w.is_string()) {
                try {
                    weight = parse_weight(w.get<std::string>());
                } catch (const std::invalid_argument& e) {
                    throw std::runtime_error("entry " + std::to_string(i) + ": " + e.what());
                }
            } else if (w.is_number_integer() || w.is_number_unsigned()) {
                weight = Rational(BigInt(w.dump()));
                if (weight < 0) {
                    throw std::runtime_error("entry " + std::to_string(i) + ": negative weight");
                }
            } else {
                throw std::runtime_error("entry " + std::to_string(i) +
                                         ": weight must be a string or integer (floats are inexact)");
            }
            parties.push_back(Party{entry["id"].get<std::string>(), std::move(weight)});
        }
        return WeightDistribution(std::move(parties));
    }

    static WeightDistribution load(std::istream& in, WeightFormat format) {
        return format == WeightFormat::Csv ? from_csv(in) : from_json(in);
    }

    std::string to_csv() const {
        std::string out = "id,weight\n";
        for (const Party& p : parties_) {
            out += p.id;
            out += ',';
            out += swiper::to_string(p.weight);
            out += '\n';
        }
        return out;
    }

    std::string to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const Party& p : parties_) {
            arr.push_back({{"id", p.id}, {"weight", swiper::to_string(p.weight)}});
        }
        return arr.dump(2) + "\n";
    }

  private:
    std::vector<Party> parties_;
    Rational total_ = 0;
};

}  // namespace swiper
