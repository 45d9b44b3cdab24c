#include "rsm/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "rsm/error.hpp"

namespace rsm {

using Json = nlohmann::ordered_json;

namespace {

// Code points, so the "ν" labels line up.
std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::MalformedDocument, where + ": " + what);
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::MalformedDocument, std::string("malformed JSON at byte ") +
                                                      std::to_string(e.byte) + ": " + e.what());
    }
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) malformed(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) malformed(where, std::string("missing \"") + key + "\"");
    return *it;
}

std::vector<std::string> name_list(const Json& j, const std::string& where) {
    if (!j.is_array()) malformed(where, "expected an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) malformed(where + "/" + std::to_string(i), "expected a string");
        names.push_back(j[i].get<std::string>());
    }
    return names;
}

class NameIndex {
public:
    NameIndex(const std::vector<std::string>& firms, const std::vector<std::string>& workers) {
        add(firms, Side::Firm);
        add(workers, Side::Worker);
    }

    AgentId lookup(const std::string& name, const std::string& where) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) throw Error(ErrorKind::UnknownAgent, where + ": unknown agent \"" + name + "\"");
        return it->second;
    }

    int lookup(const std::string& name, Side side, const std::string& where) const {
        const AgentId id = lookup(name, where);
        if (id.side != side)
            throw Error(ErrorKind::UnknownAgent,
                        where + ": \"" + name + "\" is not a " + side_name(side));
        return id.index;
    }

private:
    void add(const std::vector<std::string>& names, Side side) {
        for (int i = 0; i < static_cast<int>(names.size()); ++i) {
            if (!ids_.emplace(names[i], AgentId{side, i}).second)
                throw Error(ErrorKind::InvalidInput, "duplicate agent name \"" + names[i] + "\"");
        }
    }

    std::map<std::string, AgentId> ids_;
};

AgentSet parse_set(const Json& j, Side side, const NameIndex& index, const std::string& where) {
    if (!j.is_array()) malformed(where, "expected an array of names");
    AgentSet s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "/" + std::to_string(i);
        if (!j[i].is_string()) malformed(at, "expected a string");
        const int member = index.lookup(j[i].get<std::string>(), side, at);
        if (s.contains(member)) throw Error(ErrorKind::InvalidInput, at + ": repeated agent");
        s.insert(member);
    }
    return s;
}

Json set_json(AgentSet s, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (int m : s.members()) out.push_back(names[m]);
    return out;
}

PreferenceRelation parse_preference(const Json& j, AgentId owner, int opposite_count, const NameIndex& index,
                                    const std::string& where) {
    if (!j.is_object() || j.size() != 1) malformed(where, "expected {\"ranked\": ...} or {\"responsive\": ...}");
    const Side other = opposite(owner.side);
    if (j.contains("ranked")) {
        const Json& list = j["ranked"];
        if (!list.is_array()) malformed(where + "/ranked", "expected an array of subsets");
        RankedSubsets form;
        for (std::size_t i = 0; i < list.size(); ++i)
            form.ranking.push_back(parse_set(list[i], other, index, where + "/ranked/" + std::to_string(i)));
        return PreferenceRelation(owner, opposite_count, std::move(form));
    }
    if (j.contains("responsive")) {
        const std::string at = where + "/responsive";
        const Json& body = j["responsive"];
        const Json& quota = field(body, "quota", at);
        if (!quota.is_number_unsigned()) malformed(at + "/quota", "expected a nonnegative integer");
        const Json& priority = field(body, "priority", at);
        if (!priority.is_array()) malformed(at + "/priority", "expected an array of names");
        Responsive form;
        form.quota = quota.get<int>();
        for (std::size_t i = 0; i < priority.size(); ++i) {
            const std::string pat = at + "/priority/" + std::to_string(i);
            if (!priority[i].is_string()) malformed(pat, "expected a string");
            form.priority.push_back(index.lookup(priority[i].get<std::string>(), other, pat));
        }
        return PreferenceRelation(owner, opposite_count, std::move(form));
    }
    malformed(where, "expected \"ranked\" or \"responsive\"");
}

Json preference_json(const PreferenceRelation& pref, const std::vector<std::string>& other_names) {
    Json out = Json::object();
    if (const auto* ranked = std::get_if<RankedSubsets>(&pref.form())) {
        Json list = Json::array();
        for (AgentSet s : ranked->ranking) list.push_back(set_json(s, other_names));
        out["ranked"] = std::move(list);
    } else {
        const auto& resp = std::get<Responsive>(pref.form());
        Json priority = Json::array();
        for (int p : resp.priority) priority.push_back(other_names[p]);
        out["responsive"] = Json{{"quota", resp.quota}, {"priority", std::move(priority)}};
    }
    return out;
}

}  // namespace

MarketDocument parse_market(std::string_view json_text) {
    const Json root = parse_json(json_text);
    auto firm_names = name_list(field(root, "firms", ""), "/firms");
    auto worker_names = name_list(field(root, "workers", ""), "/workers");
    const NameIndex index(firm_names, worker_names);
    const Json& prefs = field(root, "preferences", "");
    if (!prefs.is_object()) malformed("/preferences", "expected an object keyed by agent name");

    for (const auto& [name, value] : prefs.items()) index.lookup(name, "/preferences/" + name);

    const int nf = static_cast<int>(firm_names.size());
    const int nw = static_cast<int>(worker_names.size());
    auto collect = [&](const std::vector<std::string>& names, Side side, int opposite_count) {
        std::vector<PreferenceRelation> out;
        for (int i = 0; i < static_cast<int>(names.size()); ++i) {
            const std::string where = "/preferences/" + names[i];
            auto it = prefs.find(names[i]);
            if (it == prefs.end()) malformed("/preferences", "missing preference for \"" + names[i] + "\"");
            out.push_back(parse_preference(*it, AgentId{side, i}, opposite_count, index, where));
        }
        return out;
    };
    auto firm_prefs = collect(firm_names, Side::Firm, nw);
    auto worker_prefs = collect(worker_names, Side::Worker, nf);
    return MarketDocument{std::move(firm_names), std::move(worker_names),
                          Market(nf, nw, std::move(firm_prefs), std::move(worker_prefs))};
}

std::string print_market(const MarketDocument& doc) {
    Json prefs = Json::object();
    for (Side side : {Side::Firm, Side::Worker}) {
        const auto& names = doc.names(side);
        for (int i = 0; i < static_cast<int>(names.size()); ++i)
            prefs[names[i]] = preference_json(doc.market.pref(AgentId{side, i}), doc.names(opposite(side)));
    }
    Json root = Json::object();
    root["firms"] = doc.firm_names;
    root["workers"] = doc.worker_names;
    root["preferences"] = std::move(prefs);
    return root.dump(2) + "\n";
}

Lottery parse_lottery(std::string_view json_text, const MarketDocument& doc) {
    const Json root = parse_json(json_text);
    const Json& terms = field(root, "terms", "");
    if (!terms.is_array()) malformed("/terms", "expected an array");
    const NameIndex index(doc.firm_names, doc.worker_names);

    std::vector<LotteryTerm> out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string where = "/terms/" + std::to_string(t);
        const Json& weight = field(terms[t], "weight", where);
        if (!weight.is_string())
            throw Error(ErrorKind::BadWeight, where + "/weight: weights are \"n/d\" strings");
        Rational w;
        try {
            w = parse_rational(weight.get<std::string>());
        } catch (const Error& e) {
            throw Error(e.kind(), where + "/weight: " + e.what());
        }
        const Json& rows = field(terms[t], "matching", where);
        if (!rows.is_object()) malformed(where + "/matching", "expected an object keyed by firm name");
        std::vector<AgentSet> firm_rows(doc.firm_names.size());
        for (const auto& [name, set] : rows.items()) {
            const std::string at = where + "/matching/" + name;
            const int f = index.lookup(name, Side::Firm, at);
            firm_rows[f] = parse_set(set, Side::Worker, index, at);
        }
        out.push_back(LotteryTerm{w, Matching::from_firm_rows(doc.market.num_workers(), std::move(firm_rows))});
    }
    return Lottery(std::move(out));
}

std::string print_lottery(const Lottery& x, const MarketDocument& doc) {
    Json terms = Json::array();
    for (const auto& t : x.terms()) {
        Json rows = Json::object();
        for (int f = 0; f < t.matching.num_firms(); ++f)
            rows[doc.firm_names[f]] = set_json(t.matching.of_firm(f), doc.worker_names);
        terms.push_back(Json{{"weight", to_string(t.weight)}, {"matching", std::move(rows)}});
    }
    Json root = Json::object();
    root["terms"] = std::move(terms);
    return root.dump(2) + "\n";
}

std::string matching_label(std::size_t index) { return "ν" + std::to_string(index + 1); }

std::string format_lottery(const Lottery& x, const StableSet& ss) {
    std::ostringstream out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out << " + ";
        out << to_string(x[i].weight) << ' ';
        if (auto idx = ss.index_of(x[i].matching))
            out << matching_label(*idx);
        else
            out << '[' << to_string(x[i].matching) << ']';
    }
    return out.str();
}

std::string format_set(AgentSet s, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (int m : s.members()) {
        if (!first) out += ',';
        out += names[m];
        first = false;
    }
    return out + "}";
}

std::string format_stable_table(const StableSet& ss, const MarketDocument& doc) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    header.insert(header.end(), doc.firm_names.begin(), doc.firm_names.end());
    cells.push_back(header);
    for (std::size_t i = 0; i < ss.size(); ++i) {
        std::vector<std::string> row{matching_label(i)};
        for (int f = 0; f < ss[i].num_firms(); ++f) row.push_back(format_set(ss[i].of_firm(f), doc.worker_names));
        cells.push_back(std::move(row));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c] << std::string(width[c] - display_width(row[c]), ' ');
            out << (c + 1 == row.size() ? "\n" : (c == 0 ? " | " : "  "));
        }
    }
    return out.str();
}

}  // namespace rsm
