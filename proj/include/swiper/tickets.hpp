#pragma once

#include "swiper/rational.hpp"
#include "swiper/weights.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swiper {

/// Integer tickets t_1..t_n, one entry per party in distribution order.
/// The cached total is always the sum of the entries.
class TicketAssignment {
  public:
    explicit TicketAssignment(std::vector<std::int64_t> tickets) : tickets_(std::move(tickets)) {
        for (std::int64_t t : tickets_) {
            if (t < 0) {
                throw std::invalid_argument("negative ticket count");
            }
        }
        total_ = std::accumulate(tickets_.begin(), tickets_.end(), std::int64_t{0});
    }

    std::size_t size() const { return tickets_.size(); }
    std::int64_t total() const { return total_; }
    std::int64_t operator[](std::size_t i) const { return tickets_.at(i); }
    const std::vector<std::int64_t>& values() const { return tickets_; }

    std::int64_t holders() const {
        return std::count_if(tickets_.begin(), tickets_.end(), [](std::int64_t t) { return t > 0; });
    }

    std::int64_t max_tickets() const {
        return tickets_.empty() ? 0 : *std::max_element(tickets_.begin(), tickets_.end());
    }

    bool operator==(const TicketAssignment& other) const = default;

  private:
    std::vector<std::int64_t> tickets_;
    std::int64_t total_ = 0;
};

namespace detail {

inline std::int64_t parse_ticket_count(const std::string& text) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid ticket count: '" + text + "'");
    }
    if (pos != text.size() || v < 0) {
        throw std::invalid_argument("invalid ticket count: '" + text + "'");
    }
    return v;
}

inline TicketAssignment align_tickets(const std::map<std::string, std::int64_t>& by_id,
                                      const WeightDistribution& dist) {
    std::vector<std::int64_t> tickets;
    tickets.reserve(dist.size());
    for (const Party& p : dist.parties()) {
        auto it = by_id.find(p.id);
        if (it == by_id.end()) {
            throw std::runtime_error("tickets file is missing party '" + p.id + "'");
        }
        tickets.push_back(it->second);
    }
    if (by_id.size() != dist.size()) {
        for (const auto& [id, _] : by_id) {
            bool known = false;
            for (const Party& p : dist.parties()) {
                if (p.id == id) { known = true; break; }
            }
            if (!known) {
                throw std::runtime_error("tickets file names unknown party '" + id + "'");
            }
        }
    }
    return TicketAssignment(std::move(tickets));
}

}  // namespace detail

/// CSV rows "id,tickets" (optional header), aligned to the distribution by id.
inline TicketAssignment tickets_from_csv(std::istream& in, const WeightDistribution& dist) {
    std::map<std::string, std::int64_t> by_id;
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
            throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'id,tickets'");
        }
        const std::string id{detail::trim(row.substr(0, comma))};
        const std::string count_field{detail::trim(row.substr(comma + 1))};
        std::int64_t count = 0;
        try {
            count = detail::parse_ticket_count(count_field);
        } catch (const std::invalid_argument& e) {
            if (first_data_line) {
                first_data_line = false;
                continue;
            }
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        first_data_line = false;
        if (!by_id.emplace(id, count).second) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate id '" + id + "'");
        }
    }
    return detail::align_tickets(by_id, dist);
}

/// JSON: either a bare {"id": count, ...} object or any object with a
/// "tickets" member of that shape (the `solve` output can be fed back in).
inline TicketAssignment tickets_from_json(std::istream& in, const WeightDistribution& dist) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("tickets")) {
        doc = doc["tickets"];
    }
    if (!doc.is_object()) {
        throw std::runtime_error("ticket JSON must be an object mapping id to count");
    }
    std::map<std::string, std::int64_t> by_id;
    for (const auto& [id, value] : doc.items()) {
        if (!value.is_number_integer() && !value.is_number_unsigned()) {
            throw std::runtime_error("ticket count for '" + id + "' must be an integer");
        }
        const std::int64_t count = value.get<std::int64_t>();
        if (count < 0) {
            throw std::runtime_error("ticket count for '" + id + "' must be non-negative");
        }
        by_id.emplace(id, count);
    }
    return detail::align_tickets(by_id, dist);
}

inline std::string tickets_to_csv(const WeightDistribution& dist, const TicketAssignment& t) {
    if (t.size() != dist.size()) {
        throw std::invalid_argument("ticket/party count mismatch");
    }
    std::string out = "id,tickets\n";
    for (std::size_t i = 0; i < dist.size(); ++i) {
        out += dist.party(i).id;
        out += ',';
        out += std::to_string(t[i]);
        out += '\n';
    }
    return out;
}

}  // namespace swiper
