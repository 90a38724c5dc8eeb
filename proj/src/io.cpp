#include "gcas/io.hpp"

#include <json.hpp>

#include <sstream>

namespace gcas {

namespace {

using ordered_json = nlohmann::ordered_json;

IntArray affine_from_json(const ordered_json& doc, const char* field, Int q, Int vars) {
    IntArray out = IntArray::Zero(q - 1, vars);
    if (!doc.contains(field)) return out;
    const auto& rows = doc.at(field);
    if (!rows.is_array() || static_cast<Int>(rows.size()) != q - 1)
        throw std::invalid_argument(std::string("params: ") + field +
                                    " must have q-1 coefficient rows");
    for (Int g = 0; g < q - 1; ++g) {
        const auto& row = rows.at(static_cast<std::size_t>(g));
        if (!row.is_array() || static_cast<Int>(row.size()) != vars)
            throw std::invalid_argument(std::string("params: ") + field +
                                        " rows must list one coefficient per variable");
        for (Int l = 0; l < vars; ++l) out(g, l) = row.at(static_cast<std::size_t>(l)).get<Int>();
    }
    return out;
}

ordered_json affine_to_json(const IntArray& coeffs) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index g = 0; g < coeffs.rows(); ++g) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index l = 0; l < coeffs.cols(); ++l) row.push_back(coeffs(g, l));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<Int>> chains_from_json(const ordered_json& doc, const char* field) {
    std::vector<std::vector<Int>> out;
    if (!doc.contains(field))
        throw std::invalid_argument(std::string("params: missing ") + field);
    for (const auto& chain : doc.at(field)) {
        if (!chain.is_array())
            throw std::invalid_argument(std::string("params: ") + field +
                                        " must be a list of index lists");
        out.push_back(chain.get<std::vector<Int>>());
    }
    return out;
}

std::vector<std::vector<Int>> coeff_lists_from_json(const ordered_json& doc, const char* field,
                                                    const std::vector<std::vector<Int>>& chains) {
    std::vector<std::vector<Int>> out;
    if (!doc.contains(field)) {
        for (const auto& chain : chains)
            out.emplace_back(chain.empty() ? 0 : chain.size() - 1, Int{1});
        return out;
    }
    for (const auto& list : doc.at(field)) out.push_back(list.get<std::vector<Int>>());
    return out;
}

ordered_json nested_to_json(const std::vector<std::vector<Int>>& lists) {
    ordered_json out = ordered_json::array();
    for (const auto& list : lists) out.push_back(list);
    return out;
}

void check_declared_count(const ordered_json& doc, const char* field, Int actual) {
    if (doc.contains(field) && doc.at(field).get<Int>() != actual)
        throw std::invalid_argument(std::string("params: ") + field +
                                    " does not match the partition count");
}

}  // namespace

OffsetStrategy strategy_from_string(const std::string& name) {
    if (name == "as-printed") return OffsetStrategy::AsPrintedUnscaled;
    if (name == "as-printed-scaled") return OffsetStrategy::AsPrintedScaled;
    if (name == "mirror-t1") return OffsetStrategy::MirrorTheorem1;
    throw std::invalid_argument("unknown offset strategy: " + name);
}

ParamsDocument parse_params(const std::string& json_text) {
    const ordered_json doc = ordered_json::parse(json_text);
    const std::string theorem = doc.at("theorem").get<std::string>();

    if (theorem == "t1") {
        Theorem1Function fn{Modulus(doc.at("q").get<Int>())};
        fn.b = doc.at("b").get<Int>();
        fn.m = doc.at("m").get<Int>();
        fn.n = doc.at("n").get<Int>();
        fn.partitions = chains_from_json(doc, "partitions");
        fn.d = coeff_lists_from_json(doc, "d", fn.partitions);
        fn.lambda = affine_from_json(doc, "lambda", fn.q.q, fn.m + fn.n);
        fn.lambda0 = doc.value("lambda0", Int{0});
        check_declared_count(doc, "k", fn.k());
        return ParamsDocument{Theorem1Params(std::move(fn), doc.at("N").get<Int>())};
    }
    if (theorem == "t2") {
        Theorem2Function fn{Modulus(doc.at("q").get<Int>())};
        fn.b1 = doc.at("b1").get<Int>();
        fn.b2 = doc.at("b2").get<Int>();
        fn.m = doc.at("m").get<Int>();
        fn.n = doc.at("n").get<Int>();
        fn.x_partitions = chains_from_json(doc, "x_partitions");
        fn.y_partitions = chains_from_json(doc, "y_partitions");
        fn.d = coeff_lists_from_json(doc, "d", fn.x_partitions);
        fn.d_prime = coeff_lists_from_json(doc, "d_prime", fn.y_partitions);
        fn.lambda = affine_from_json(doc, "lambda", fn.q.q, fn.m);
        fn.nu = affine_from_json(doc, "nu", fn.q.q, fn.n);
        fn.lambda0 = doc.value("lambda0", Int{0});
        check_declared_count(doc, "k1", fn.k1());
        check_declared_count(doc, "k2", fn.k2());
        const OffsetStrategy strategy =
            strategy_from_string(doc.value("strategy", std::string("mirror-t1")));
        return ParamsDocument{Theorem2Params(std::move(fn), doc.at("N1").get<Int>(),
                                             doc.at("N2").get<Int>(), strategy)};
    }
    throw std::invalid_argument("params: theorem must be \"t1\" or \"t2\"");
}

std::string serialize_params(const ParamsDocument& doc) {
    ordered_json out;
    if (doc.is_t1()) {
        const auto& p = std::get<Theorem1Params>(doc.payload);
        out["theorem"] = "t1";
        out["q"] = p.fn.q.q;
        out["b"] = p.fn.b;
        out["m"] = p.fn.m;
        out["n"] = p.fn.n;
        out["N"] = p.N;
        out["k"] = p.fn.k();
        out["partitions"] = nested_to_json(p.fn.partitions);
        out["d"] = nested_to_json(p.fn.d);
        out["lambda"] = affine_to_json(p.fn.lambda);
        out["lambda0"] = p.fn.lambda0;
    } else {
        const auto& p = std::get<Theorem2Params>(doc.payload);
        out["theorem"] = "t2";
        out["q"] = p.fn.q.q;
        out["b1"] = p.fn.b1;
        out["b2"] = p.fn.b2;
        out["m"] = p.fn.m;
        out["n"] = p.fn.n;
        out["N1"] = p.N1;
        out["N2"] = p.N2;
        out["k1"] = p.fn.k1();
        out["k2"] = p.fn.k2();
        out["x_partitions"] = nested_to_json(p.fn.x_partitions);
        out["y_partitions"] = nested_to_json(p.fn.y_partitions);
        out["d"] = nested_to_json(p.fn.d);
        out["d_prime"] = nested_to_json(p.fn.d_prime);
        out["lambda"] = affine_to_json(p.fn.lambda);
        out["nu"] = affine_to_json(p.fn.nu);
        out["lambda0"] = p.fn.lambda0;
        out["strategy"] = to_string(p.offset_strategy);
    }
    return out.dump(2) + "\n";
}

ArraySet parse_array_set(const std::string& json_text) {
    const ordered_json doc = ordered_json::parse(json_text);
    const Int q = doc.at("q").get<Int>();
    const Int rows = doc.at("rows").get<Int>();
    const Int cols = doc.at("cols").get<Int>();
    if (rows < 1 || cols < 1) throw std::invalid_argument("set: rows/cols must be positive");
    if (rows * cols > kMaxArrayCells) throw std::length_error("set: array too large");

    ArraySet set{Modulus(q)};
    for (const auto& member : doc.at("members")) {
        if (static_cast<Int>(member.size()) != rows)
            throw std::invalid_argument("set: member row count mismatch");
        IntArray entries(rows, cols);
        for (Int g = 0; g < rows; ++g) {
            const auto& row = member.at(static_cast<std::size_t>(g));
            if (static_cast<Int>(row.size()) != cols)
                throw std::invalid_argument("set: member column count mismatch");
            for (Int i = 0; i < cols; ++i) {
                const Int v = row.at(static_cast<std::size_t>(i)).get<Int>();
                if (v < 0 || v >= q) throw std::invalid_argument("set: entry outside Z_q");
                entries(g, i) = v;
            }
        }
        set.members.emplace_back(set.q, std::move(entries));
    }
    if (set.members.empty()) throw std::invalid_argument("set: no members");

    if (doc.contains("labels")) {
        for (const auto& label : doc.at("labels"))
            set.labels.push_back(label.get<std::vector<Int>>());
        if (set.labels.size() != set.members.size())
            throw std::invalid_argument("set: one label per member required");
    } else {
        set.labels.assign(set.members.size(), {});
    }
    return set;
}

std::string serialize_array_set(const ArraySet& set) {
    ordered_json out;
    out["q"] = set.q.q;
    out["rows"] = set.rows();
    out["cols"] = set.cols();
    ordered_json labels = ordered_json::array();
    for (const auto& label : set.labels) labels.push_back(label);
    out["labels"] = std::move(labels);
    ordered_json members = ordered_json::array();
    for (const auto& member : set.members) {
        ordered_json rows = ordered_json::array();
        for (Int g = 0; g < member.rows(); ++g) {
            ordered_json row = ordered_json::array();
            for (Int i = 0; i < member.cols(); ++i) row.push_back(member.entries(g, i));
            rows.push_back(std::move(row));
        }
        members.push_back(std::move(rows));
    }
    out["members"] = std::move(members);
    return out.dump(2) + "\n";
}

std::string array_set_to_csv(const ArraySet& set) {
    std::ostringstream out;
    out << "q,rows,cols\n" << set.q.q << "," << set.rows() << "," << set.cols() << "\n";
    for (const auto& member : set.members) {
        bool first = true;
        for (Int g = 0; g < member.rows(); ++g)
            for (Int i = 0; i < member.cols(); ++i) {
                if (!first) out << ",";
                out << member.entries(g, i);
                first = false;
            }
        out << "\n";
    }
    return out.str();
}

std::string row_digit_string(const ExponentArray& member, Int row) {
    std::ostringstream out;
    if (member.q.q <= 10) {
        for (Int i = 0; i < member.cols(); ++i) out << member.entries(row, i);
    } else {
        for (Int i = 0; i < member.cols(); ++i) {
            if (i) out << ",";
            out << member.entries(row, i);
        }
    }
    return out.str();
}

}  // namespace gcas
