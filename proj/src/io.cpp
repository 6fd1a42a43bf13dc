#include "ribbon/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

class MatrixTextParser {
public:
    explicit MatrixTextParser(std::string_view text) : text_(text) {}

    IntMatrix parse() {
        skip_space();
        IntMatrix m;
        if (peek() == '[')
            m = parse_rows();
        else if (peek() == '(')
            m = parse_columns();
        else
            fail("expected '[' or '('");
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return m;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::string seen = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(what + " (found " + seen + ")", line_, col_);
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    Integer parse_integer() {
        skip_space();
        const bool quoted = peek() == '"';
        if (quoted) advance();
        const std::size_t start = pos_;
        const std::size_t line = line_, col = col_;
        if (peek() == '-' || peek() == '+') advance();
        const std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        if (pos_ == digits) fail("expected an integer");
        std::string token(text_.substr(start, pos_ - start));
        if (token.front() == '+') token.erase(0, 1);
        if (quoted) expect('"');
        Integer v;
        if (v.set_str(token, 10) != 0) throw ParseError("bad integer '" + token + "'", line, col);
        return v;
    }

    std::vector<Integer> parse_list(char open, char close) {
        expect(open);
        std::vector<Integer> out;
        skip_space();
        if (peek() == close) {
            advance();
            return out;
        }
        for (;;) {
            out.push_back(parse_integer());
            skip_space();
            if (peek() == close) {
                advance();
                return out;
            }
            expect(',');
        }
    }

    IntMatrix parse_rows() {
        expect('[');
        std::vector<std::vector<Integer>> rows;
        skip_space();
        if (peek() == ']') {
            advance();
            return IntMatrix();
        }
        for (;;) {
            skip_space();
            const std::size_t line = line_, col = col_;
            rows.push_back(parse_list('[', ']'));
            if (rows.back().size() != rows.front().size())
                throw ParseError("row has " + std::to_string(rows.back().size()) + " entries, expected " +
                                     std::to_string(rows.front().size()),
                                 line, col);
            skip_space();
            if (peek() == ']') {
                advance();
                break;
            }
            expect(',');
        }
        std::vector<Integer> flat;
        for (auto& r : rows) std::move(r.begin(), r.end(), std::back_inserter(flat));
        return IntMatrix(rows.size(), rows.front().size(), std::move(flat));
    }

    IntMatrix parse_columns() {
        std::vector<std::vector<Integer>> cols;
        for (;;) {
            skip_space();
            const std::size_t line = line_, col = col_;
            cols.push_back(parse_list('(', ')'));
            if (cols.back().size() != cols.front().size())
                throw ParseError("column has " + std::to_string(cols.back().size()) + " entries, expected " +
                                     std::to_string(cols.front().size()),
                                 line, col);
            skip_space();
            if (peek() == ',') advance();
            skip_space();
            if (peek() != '(') break;
        }
        IntMatrix m(cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
        return m;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

Integer integer_from_json(const Json& v) {
    if (v.is_number_integer()) return Integer(v.dump());
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        Integer out;
        std::string digits = !s.empty() && s.front() == '+' ? s.substr(1) : s;
        const bool ok = !digits.empty() &&
                        digits.find_first_not_of("0123456789", digits.front() == '-' ? 1 : 0) == std::string::npos &&
                        digits != "-" && out.set_str(digits, 10) == 0;
        if (!ok) throw ParseError("matrix entry \"" + s + "\" is not a decimal integer");
        return out;
    }
    throw ParseError("matrix entry " + v.dump() + " is not an integer or decimal string");
}

ParseError json_error(const nlohmann::json::parse_error& e, const std::string& text) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return ParseError("malformed JSON", line, col);
}

} // namespace

IntMatrix parse_matrix_text(std::string_view text) { return MatrixTextParser(text).parse(); }

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be a JSON array of rows");
    if (j.empty()) return IntMatrix();
    const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
    std::vector<Integer> flat;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("matrix row must be a JSON array");
        if (row.size() != cols) throw ParseError("ragged matrix rows");
        for (const auto& v : row) flat.push_back(integer_from_json(v));
    }
    return IntMatrix(j.size(), cols, std::move(flat));
}

Json group_to_json(const FiniteAbelianGroup& g) {
    Json out = Json::array();
    for (const auto& d : g.invariant_factors()) out.push_back(d.get_str());
    return out;
}

KnotRecord record_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("knot record must be a JSON object");
    KnotRecord r;
    try {
        if (j.contains("name")) r.name = j.at("name").get<std::string>();
        if (j.contains("seifert")) r.seifert = matrix_from_json(j.at("seifert"));
        if (j.contains("catalog")) r.catalog = j.at("catalog").get<std::string>();
        if (j.contains("bounding_form")) r.bounding_form = matrix_from_json(j.at("bounding_form"));
        if (j.contains("braid")) {
            const Json& b = j.at("braid");
            const std::size_t strands = b.at("strands").get<std::size_t>();
            const Json& letters = b.at("letters");
            if (letters.is_string()) {
                r.braid = parse_braid(letters.get<std::string>(), strands);
            } else {
                BraidWord w;
                w.strands = strands;
                w.letters = letters.get<std::vector<int>>();
                r.braid = std::move(w);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("knot record: ") + e.what());
    }
    return r;
}

KnotRecord read_knot_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read knot file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const ParseError pe = json_error(e, text);
        throw ParseError(path.string() + ": malformed JSON", pe.line(), pe.column());
    }
    KnotRecord r = record_from_json(j);
    if (r.name.empty()) r.name = path.stem().string();
    return r;
}

KnotRecord knot_reference(const std::string& ref) {
    if (std::filesystem::exists(ref)) return read_knot_file(ref);
    KnotRecord r;
    r.name = ref;
    r.catalog = ref;
    return r;
}

namespace {

std::string_view route_name(TwoKnot::Route r) {
    return r == TwoKnot::Route::EvenForm ? "even-form" : "two-twist-spin";
}

} // namespace

Json report_to_json(const InvariantsReport& r) {
    Json j;
    j["name"] = r.knot.name;
    j["route"] = route_name(r.invariants.route);
    if (r.knot.seifert) j["seifert"] = matrix_to_json(r.knot.seifert->matrix());
    if (r.knot.bounding_form) j["bounding_form"] = matrix_to_json(*r.knot.bounding_form);
    j["mu"] = std::to_string(r.invariants.mu.value());
    j["signature"] = r.invariants.signature.get_str();
    j["determinant"] = r.invariants.determinant.get_str();
    j["h1"] = group_to_json(r.invariants.h1);
    j["h1_text"] = r.invariants.h1.to_string();
    j["doubling"] = r.doubling;
    return j;
}

std::string report_to_text(const InvariantsReport& r) {
    std::ostringstream os;
    const bool even_form = r.invariants.route == TwoKnot::Route::EvenForm;
    os << "knot:        " << r.knot.name << '\n';
    if (r.knot.seifert) os << "seifert:     " << r.knot.seifert->matrix() << '\n';
    os << "route:       " << (even_form ? "even bounding form" : "2-twist spin, form S + S^T") << '\n';
    os << "form:        " << r.invariants.form << '\n';
    os << "mu:          " << r.invariants.mu.to_string() << '\n';
    os << "signature:   " << r.invariants.signature.get_str() << '\n';
    os << "determinant: " << r.invariants.determinant.get_str() << '\n';
    os << "H1:          " << r.invariants.h1.to_string() << '\n';
    os << "G ⊕ G:       " << (r.doubling ? "yes" : "no") << '\n';
    return os.str();
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["conclusion"] = to_string(v.conclusion);
    j["theorem_tag"] = v.theorem_tag;
    if (v.mu_witness)
        j["mu"] = Json::array({std::to_string(v.mu_witness->first.value()),
                               std::to_string(v.mu_witness->second.value())});
    if (v.torsion_witness) {
        j["torsion"] = group_to_json(*v.torsion_witness);
        j["torsion_text"] = v.torsion_witness->to_string();
    }
    j["explanation"] = v.explanation();
    return j;
}

std::string verdict_to_text(const Verdict& v) {
    return std::string(to_string(v.conclusion)) + " [" + v.theorem_tag + "]\n" + v.explanation() + '\n';
}

Json snf_to_json(const SnfResult& snf, bool transforms) {
    Json j;
    Json diag = Json::array();
    for (const auto& d : snf.diagonal()) diag.push_back(d.get_str());
    j["diagonal"] = std::move(diag);
    j["D"] = matrix_to_json(snf.D);
    if (transforms) {
        j["U"] = matrix_to_json(snf.U);
        j["V"] = matrix_to_json(snf.V);
    }
    return j;
}

std::string snf_to_text(const SnfResult& snf, bool transforms) {
    std::ostringstream os;
    os << "D = diag(";
    const auto diag = snf.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) os << (i ? "," : "") << diag[i].get_str();
    os << ")\n";
    if (transforms) os << "U = " << snf.U << "\nV = " << snf.V << '\n';
    return os.str();
}

} // namespace ribbon
