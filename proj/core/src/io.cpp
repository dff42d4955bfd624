#include "hyperlag/io.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hyperlag {

std::string to_text(const Hypergraph& g) {
    std::ostringstream os;
    os << "{\"r\": " << g.uniformity() << ", \"n\": " << g.vertex_count() << ", \"edges\": [";
    bool first_edge = true;
    for (const RSet& e : g.edges()) {
        os << (first_edge ? "[" : ",[");
        first_edge = false;
        for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
        os << ']';
    }
    os << "]}";
    return os.str();
}

Hypergraph parse_hypergraph(std::string_view line) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& ex) {
        throw std::invalid_argument(std::string("malformed hypergraph record: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("r") || !doc.contains("n") || !doc.contains("edges")) {
        throw std::invalid_argument("hypergraph record needs \"r\", \"n\" and \"edges\"");
    }
    const auto& r = doc["r"];
    const auto& n = doc["n"];
    const auto& edges = doc["edges"];
    if (!r.is_number_integer() || !n.is_number_integer() || !edges.is_array()) {
        throw std::invalid_argument("hypergraph record has fields of the wrong type");
    }
    std::vector<RSet> sets;
    sets.reserve(edges.size());
    for (const auto& e : edges) {
        if (!e.is_array()) throw std::invalid_argument("hypergraph edge must be an array");
        std::vector<Vertex> elems;
        for (const auto& v : e) {
            if (!v.is_number_integer()) throw std::invalid_argument("vertex labels must be integers");
            elems.push_back(v.get<Vertex>());
        }
        sets.emplace_back(std::move(elems));
    }
    return Hypergraph(r.get<int>(), n.get<int>(), std::move(sets));
}

std::vector<Hypergraph> read_hypergraphs(std::istream& in) {
    std::vector<Hypergraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_hypergraph(line));
    }
    return out;
}

}  // namespace hyperlag
