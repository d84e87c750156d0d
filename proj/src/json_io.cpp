#include "hallkit/json_io.hpp"

namespace hallkit {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

std::vector<int> int_array(const Json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        require(x.is_number_integer(), std::string(what) + " must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("cannot parse " + what + " as JSON: " + e.what());
    }
}

Json field_to_json(const FieldCtx& f) { return {{"p", f.p()}, {"e", f.e()}}; }

Field field_from_json(const Json& j, const Budget& budget) {
    return guarded("field", [&] {
        require(j.is_object() && j.contains("p"), "field must be {\"p\": int, \"e\": int}");
        return make_field(j.at("p").get<int>(), j.value("e", 1), budget);
    });
}

Json fel_to_json(const FieldCtx& f, Fel a) { return f.residues(a); }

Fel fel_from_json(const FieldCtx& f, const Json& j) {
    if (j.is_number_integer()) {
        require(f.e() == 1, "extension-field entries must be residue arrays");
        const long long v = j.get<long long>();
        require(v >= 0 && v < f.p(), "field entry out of range");
        return f.from_int(v);
    }
    const auto r = int_array(j, "field entry");
    require(static_cast<int>(r.size()) == f.e(), "residue array must have e entries");
    for (int x : r) require(x >= 0 && x < f.p(), "residue out of range");
    return f.from_residues(r);
}

Json fpoly_to_json(const FieldCtx& f, const FPoly& p) {
    Json out = Json::array();
    for (Fel c : p.coeffs) out.push_back(fel_to_json(f, c));
    return out;
}

FPoly fpoly_from_json(const FieldCtx& f, const Json& j) {
    require(j.is_array(), "polynomial must be an array of coefficients");
    FPoly p;
    for (const auto& c : j) p.coeffs.push_back(fel_from_json(f, c));
    p.normalize();
    return p;
}

Json quiver_to_json(const Quiver& q) {
    if (!q.preset_name().empty()) return {{"preset", q.preset_name()}};
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) arrows.push_back({a.tail, a.head});
    return {{"vertices", q.n_vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
    if (j.is_string()) return Quiver::preset(j.get<std::string>());
    return guarded("quiver", [&] {
        require(j.is_object(), "quiver must be {\"preset\": name} or {\"vertices\": n, \"arrows\": [[t,h],...]}");
        if (j.contains("preset")) return Quiver::preset(j.at("preset").get<std::string>());
        std::vector<Arrow> arrows;
        for (const auto& a : j.at("arrows")) {
            const auto th = int_array(a, "arrow");
            require(th.size() == 2, "arrow must be [tail, head]");
            arrows.push_back({th[0], th[1]});
        }
        return Quiver(j.at("vertices").get<int>(), std::move(arrows));
    });
}

Json rep_to_json(const Rep& m) {
    const FieldCtx& f = m.field();
    Json mats = Json::array();
    for (const auto& a : m.mats()) {
        Json rows = Json::array();
        for (int r = 0; r < a.rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < a.cols(); ++c) row.push_back(fel_to_json(f, a(r, c)));
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    return {{"quiver", quiver_to_json(m.quiver())}, {"field", field_to_json(f)}, {"dims", m.dims()}, {"mats", mats}};
}

Rep rep_from_json(const Json& j, const Budget& budget) {
    return guarded("representation", [&] {
        require(j.is_object(), "representation must be an object");
        QuiverPtr q = share(quiver_from_json(j.at("quiver")));
        Field f = field_from_json(j.at("field"), budget);
        DimVec d = int_array(j.at("dims"), "dims");
        q->check_dims(d);
        const Json& mj = j.at("mats");
        require(mj.is_array() && static_cast<int>(mj.size()) == q->n_arrows(), "need one matrix per arrow");
        std::vector<Matrix> mats;
        for (int k = 0; k < q->n_arrows(); ++k) {
            const Arrow& a = q->arrows()[k];
            const int rows = d[a.head], cols = d[a.tail];
            Matrix m(rows, cols);
            const Json& rj = mj[k];
            require(rj.is_array() && static_cast<int>(rj.size()) == rows,
                    "matrix " + std::to_string(k) + " must have " + std::to_string(rows) + " rows");
            for (int r = 0; r < rows; ++r) {
                require(rj[r].is_array() && static_cast<int>(rj[r].size()) == cols,
                        "matrix " + std::to_string(k) + " rows must have " + std::to_string(cols) + " entries");
                for (int c = 0; c < cols; ++c) m(r, c) = fel_from_json(*f, rj[r][c]);
            }
            mats.push_back(std::move(m));
        }
        return Rep(q, f, d, std::move(mats));
    });
}

Json table_to_json(const IsoClassTable& t) {
    Json classes = Json::array();
    for (const auto& e : t.entries)
        classes.push_back({{"rep", rep_to_json(e.rep)}, {"orbit_size", e.orbit_size.get_str()}, {"aut_size", e.aut_size.get_str()}});
    return {{"quiver", quiver_to_json(*t.quiver)},
            {"field", field_to_json(*t.field)},
            {"dims", t.dims},
            {"group_order", t.group_order.get_str()},
            {"classes", classes}};
}

Json ratpoly_to_json(const RatPoly& p) { return {{"human", p.to_string()}, {"coeffs", p.to_strings()}}; }

RatPoly ratpoly_from_json(const Json& j) {
    return guarded("polynomial", [&] {
        const Json& c = j.is_object() ? j.at("coeffs") : j;
        require(c.is_array(), "polynomial must be an array of \"num/den\" strings");
        return RatPoly::from_strings(c.get<std::vector<std::string>>());
    });
}

Json partition_to_json(const Partition& p) { return p; }

Partition partition_from_json(const Json& j) { return make_partition(int_array(j, "partition")); }

Json segre_to_json(const SegreSymbol& s) {
    Json out = Json::array();
    for (const auto& e : s) out.push_back({partition_to_json(e.lambda), e.degree});
    return out;
}

SegreSymbol segre_from_json(const Json& j) {
    return guarded("Segre symbol", [&] {
        require(j.is_array(), "Segre symbol must be [[[parts], degree], ...]");
        std::vector<SegreEntry> entries;
        for (const auto& e : j) {
            require(e.is_array() && e.size() == 2 && e[1].is_number_integer(), "Segre entry must be [[parts], degree]");
            entries.push_back({partition_from_json(e[0]), e[1].get<int>()});
        }
        return make_segre(std::move(entries));
    });
}

Json decomp_to_json(const DecompSymbol& a) {
    return {{"P", a.P}, {"I", a.I}, {"regular", segre_to_json(a.regular)}};
}

DecompSymbol decomp_from_json(const Json& j) {
    return guarded("decomposition symbol", [&] {
        require(j.is_object(), "decomposition symbol must be {\"P\": [...], \"I\": [...], \"regular\": [...]}");
        return make_decomp(j.contains("P") ? int_array(j.at("P"), "P") : std::vector<int>{},
                           j.contains("I") ? int_array(j.at("I"), "I") : std::vector<int>{},
                           j.contains("regular") ? segre_from_json(j.at("regular")) : SegreSymbol{});
    });
}

Json discrete_to_json(const DiscreteClass& c) { return {{"quiver", c.preset}, {"labels", c.labels}}; }

DiscreteClass discrete_from_json(const Json& j) {
    return guarded("discrete class", [&] {
        require(j.is_object(), "discrete class must be {\"quiver\": preset, \"labels\": [...]}");
        DiscreteClass c;
        c.preset = j.at("quiver").get<std::string>();
        for (const auto& l : j.at("labels")) c.labels.push_back(int_array(l, "label"));
        return c;
    });
}

Json report_to_json(const CheckReport& r) {
    return {{"identity", r.identity},
            {"instance", r.instance},
            {"lhs", rational_to_string(r.lhs)},
            {"rhs", rational_to_string(r.rhs)},
            {"pass", r.pass}};
}

CheckReport report_from_json(const Json& j) {
    return guarded("report", [&] {
        CheckReport r{j.at("identity").get<std::string>(), j.at("instance").get<std::string>(),
                      rational_from_string(j.at("lhs").get<std::string>()),
                      rational_from_string(j.at("rhs").get<std::string>()), j.at("pass").get<bool>()};
        require(r.pass == (r.lhs == r.rhs), "report pass flag disagrees with its values");
        return r;
    });
}

}  // namespace hallkit
