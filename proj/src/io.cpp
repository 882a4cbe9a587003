#include "qlin/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qlin/dual.hpp"
#include "qlin/errors.hpp"
#include "qlin/operators.hpp"

namespace qlin {

const char* to_string(DocKind kind) {
    switch (kind) {
    case DocKind::matrix: return "matrix";
    case DocKind::form: return "form";
    case DocKind::subspace: return "subspace";
    case DocKind::quadric: return "quadric";
    case DocKind::frame: return "frame";
    }
    return "?";
}

namespace {

struct Token {
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> out;
    std::string cur;
    std::size_t line = 1, start = 1;
    char ch;
    while (in.get(ch)) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                out.push_back({std::move(cur), start});
                cur.clear();
            }
            if (ch == '\n')
                ++line;
        } else {
            if (cur.empty())
                start = line;
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back({std::move(cur), start});
    return out;
}

struct Cursor {
    const std::vector<Token>& toks;
    std::size_t pos = 0;

    bool done() const { return pos == toks.size(); }

    const Token& next(const char* what) {
        if (done()) {
            std::size_t line = toks.empty() ? 1 : toks.back().line;
            throw ParseError(std::string("unexpected end of input, expected ") + what,
                             line);
        }
        return toks[pos++];
    }
};

std::size_t parse_count(const Token& t, const char* what, std::size_t max_value) {
    for (char ch : t.text)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'",
                             t.line);
    unsigned long v = 0;
    try {
        v = std::stoul(t.text);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'",
                         t.line);
    }
    if (v > max_value)
        throw ParseError(std::string(what) + " " + t.text + " is too large", t.line);
    return v;
}

Rational parse_entry(Cursor& cur) {
    const Token& t = cur.next("a number");
    try {
        return Rational::parse(t.text);
    } catch (const Error&) {
        throw ParseError("invalid number '" + t.text + "'", t.line);
    }
}

Matrix read_matrix(Cursor& cur, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = parse_entry(cur);
    return m;
}

constexpr std::size_t max_dim = 1000;

} // namespace

InputDocument parse_document(std::istream& in, DocKind expected) {
    std::vector<Token> toks = tokenize(in);
    Cursor cur{toks};
    const Token& head = cur.next("an input kind");
    const std::size_t head_line = head.line;

    DocKind kind;
    if (head.text == "matrix")
        kind = DocKind::matrix;
    else if (head.text == "form")
        kind = DocKind::form;
    else if (head.text == "subspace")
        kind = DocKind::subspace;
    else if (head.text == "quadric")
        kind = DocKind::quadric;
    else if (head.text == "frame")
        kind = DocKind::frame;
    else
        throw ParseError("unknown input kind '" + head.text + "'", head_line);
    if (kind != expected)
        throw ParseError(std::string("expected a ") + to_string(expected) +
                             " file, found '" + head.text + "'",
                         head_line);

    InputDocument doc{kind, Matrix(1, 1)};
    switch (kind) {
    case DocKind::matrix: {
        std::size_t r = parse_count(cur.next("a row count"), "row count", max_dim);
        std::size_t c = parse_count(cur.next("a column count"), "column count", max_dim);
        if (r == 0 || c == 0)
            throw ParseError("matrix dimensions must be positive", head_line);
        doc.payload = read_matrix(cur, r, c);
        break;
    }
    case DocKind::form: {
        std::size_t n = parse_count(cur.next("a dimension"), "dimension", max_dim);
        if (n == 0)
            throw ParseError("form dimension must be positive", head_line);
        Matrix g = read_matrix(cur, n, n);
        if (!g.is_symmetric())
            throw ParseError("form matrix is not symmetric", head_line);
        doc.payload = QuadraticForm(std::move(g));
        break;
    }
    case DocKind::subspace: {
        std::size_t k = parse_count(cur.next("a generator count"), "generator count",
                                    max_dim);
        std::size_t n = parse_count(cur.next("an ambient dimension"),
                                    "ambient dimension", max_dim);
        if (n == 0)
            throw ParseError("ambient dimension must be positive", head_line);
        Matrix gens = read_matrix(cur, k, n);
        doc.payload = Subspace::span_rows(gens);
        break;
    }
    case DocKind::quadric: {
        std::size_t n = parse_count(cur.next("a dimension"), "dimension", max_dim);
        if (n == 0)
            throw ParseError("quadric dimension must be positive", head_line);
        Matrix a = read_matrix(cur, n, n);
        if (!a.is_symmetric())
            throw ParseError("quadric matrix is not symmetric", head_line);
        Matrix b = read_matrix(cur, 1, n).transpose();
        Rational c = parse_entry(cur);
        doc.payload = Quadric(std::move(a), std::move(b), std::move(c));
        break;
    }
    case DocKind::frame: {
        std::size_t n = parse_count(cur.next("a dimension"), "dimension", max_dim);
        if (n == 0)
            throw ParseError("frame dimension must be positive", head_line);
        Matrix origin = read_matrix(cur, 1, n).transpose();
        Matrix vectors = read_matrix(cur, n, n);
        try {
            doc.payload = Frame(std::move(origin), Basis(std::move(vectors)));
        } catch (const SingularMatrixError&) {
            throw ParseError("frame basis is singular", head_line);
        }
        break;
    }
    }
    if (!cur.done())
        throw ParseError("trailing input after the document", toks[cur.pos].line);
    return doc;
}

InputDocument parse_document_file(const std::string& path, DocKind expected) {
    if (path == "-")
        return parse_document(std::cin, expected);
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    try {
        return parse_document(in, expected);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string write_document(const InputDocument& doc) {
    std::ostringstream os;
    switch (doc.kind) {
    case DocKind::matrix: {
        const Matrix& m = std::get<Matrix>(doc.payload);
        os << "matrix " << m.rows() << ' ' << m.cols() << '\n' << m.to_string();
        break;
    }
    case DocKind::form: {
        const QuadraticForm& g = std::get<QuadraticForm>(doc.payload);
        os << "form " << g.dim() << '\n' << g.matrix().to_string();
        break;
    }
    case DocKind::subspace: {
        const Subspace& u = std::get<Subspace>(doc.payload);
        os << "subspace " << u.dim() << ' ' << u.ambient() << '\n'
           << u.row_basis().to_string();
        break;
    }
    case DocKind::quadric: {
        const Quadric& q = std::get<Quadric>(doc.payload);
        os << "quadric " << q.dim() << '\n'
           << q.a().to_string() << q.b().transpose().to_string()
           << q.c().to_string() << '\n';
        break;
    }
    case DocKind::frame: {
        const Frame& f = std::get<Frame>(doc.payload);
        os << "frame " << f.dim() << '\n'
           << f.origin.transpose().to_string() << f.basis.vectors().to_string();
        break;
    }
    }
    return os.str();
}

namespace {

std::string format_double(double v) {
    if (v == 0)
        return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string indent_block(const std::string& block) {
    std::string out;
    std::size_t start = 0;
    while (start < block.size()) {
        std::size_t end = block.find('\n', start);
        if (end == std::string::npos)
            end = block.size();
        out += "  ";
        out.append(block, start, end - start);
        out += '\n';
        start = end + 1;
    }
    return out;
}

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void render_entry_text(std::ostream& os, const ReportEntry& e, const char* prefix) {
    std::visit(
        overloaded{
            [&](const std::string& s) { os << prefix << e.name << ": " << s << '\n'; },
            [&](const Rational& r) {
                os << prefix << e.name << ": " << r.to_string() << '\n';
            },
            [&](double d) { os << prefix << e.name << ": " << format_double(d) << '\n'; },
            [&](long n) { os << prefix << e.name << ": " << n << '\n'; },
            [&](const Matrix& m) {
                os << prefix << e.name << ":\n";
                if (m.rows() == 0 || m.cols() == 0)
                    os << "  (empty)\n";
                else
                    os << indent_block(m.to_string());
            },
            [&](const FloatMatrix& m) {
                os << prefix << e.name << ":\n";
                if (m.rows == 0)
                    os << "  (empty)\n";
                for (std::size_t i = 0; i < m.rows; ++i) {
                    os << " ";
                    for (std::size_t j = 0; j < m.cols; ++j)
                        os << ' ' << format_double(m.data[i * m.cols + j]);
                    os << '\n';
                }
            },
            [&](const std::vector<Rational>& v) {
                os << prefix << e.name << ": [";
                for (std::size_t i = 0; i < v.size(); ++i)
                    os << (i ? ", " : "") << v[i].to_string();
                os << "]\n";
            },
            [&](const std::vector<double>& v) {
                os << prefix << e.name << ": [";
                for (std::size_t i = 0; i < v.size(); ++i)
                    os << (i ? ", " : "") << format_double(v[i]);
                os << "]\n";
            },
            [&](const std::vector<std::string>& v) {
                os << prefix << e.name << ": [";
                for (std::size_t i = 0; i < v.size(); ++i)
                    os << (i ? ", " : "") << v[i];
                os << "]\n";
            },
        },
        e.value);
}

nlohmann::ordered_json entry_json(const ReportValue& value) {
    using json = nlohmann::ordered_json;
    return std::visit(
        overloaded{
            [](const std::string& s) { return json(s); },
            [](const Rational& r) { return json(r.to_string()); },
            [](double d) { return json(d); },
            [](long n) { return json(n); },
            [](const Matrix& m) {
                json rows = json::array();
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        row.push_back(m(i, j).to_string());
                    rows.push_back(std::move(row));
                }
                return rows;
            },
            [](const FloatMatrix& m) {
                json rows = json::array();
                for (std::size_t i = 0; i < m.rows; ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < m.cols; ++j)
                        row.push_back(m.data[i * m.cols + j]);
                    rows.push_back(std::move(row));
                }
                return rows;
            },
            [](const std::vector<Rational>& v) {
                json arr = json::array();
                for (const Rational& r : v)
                    arr.push_back(r.to_string());
                return arr;
            },
            [](const std::vector<double>& v) { return json(v); },
            [](const std::vector<std::string>& v) { return json(v); },
        },
        value);
}

} // namespace

std::string render(const Report& report, bool json) {
    if (!json) {
        std::ostringstream os;
        os << "command: " << report.command << '\n';
        for (const ReportEntry& e : report.inputs)
            render_entry_text(os, e, "input ");
        for (const ReportEntry& e : report.results)
            render_entry_text(os, e, "");
        for (const ReportEntry& e : report.diagnostics)
            render_entry_text(os, e, "check ");
        return os.str();
    }
    nlohmann::ordered_json j;
    j["command"] = report.command;
    for (const char* section : {"inputs", "results", "diagnostics"})
        j[section] = nlohmann::ordered_json::object();
    for (const ReportEntry& e : report.inputs)
        j["inputs"][e.name] = entry_json(e.value);
    for (const ReportEntry& e : report.results)
        j["results"][e.name] = entry_json(e.value);
    for (const ReportEntry& e : report.diagnostics)
        j["diagnostics"][e.name] = entry_json(e.value);
    return j.dump(2) + "\n";
}

namespace {

Rational max_abs(const Matrix& m) {
    Rational best(0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            best = std::max(best, m(i, j).abs());
    return best;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string signature_string(const Signature& sig) {
    std::ostringstream os;
    os << "(s,r_p,r_n)=(" << sig.s << ',' << sig.r_p << ',' << sig.r_n << ')';
    return os.str();
}

void need_paths(const Invocation& inv, std::size_t lo, std::size_t hi,
                const char* usage) {
    if (inv.paths.size() < lo || inv.paths.size() > hi)
        throw ParseError(std::string("usage: ") + usage);
}

Matrix load_matrix(const std::string& path) {
    return std::get<Matrix>(parse_document_file(path, DocKind::matrix).payload);
}
QuadraticForm load_form(const std::string& path) {
    return std::get<QuadraticForm>(parse_document_file(path, DocKind::form).payload);
}
Subspace load_subspace(const std::string& path) {
    return std::get<Subspace>(parse_document_file(path, DocKind::subspace).payload);
}
Quadric load_quadric(const std::string& path) {
    return std::get<Quadric>(parse_document_file(path, DocKind::quadric).payload);
}
Frame load_frame(const std::string& path) {
    return std::get<Frame>(parse_document_file(path, DocKind::frame).payload);
}

void run_charpoly(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 1, "charpoly <matrix-file>");
    Matrix m = load_matrix(inv.paths[0]);
    rep.inputs.push_back({"matrix", m});
    LinearOperator op(m);
    Polynomial p = char_poly(op);
    auto [tr, det] = trace_det(op);
    rep.results.push_back({"characteristic_polynomial", p.to_string("x")});
    rep.results.push_back({"trace", tr});
    rep.results.push_back({"determinant", det});
    rep.diagnostics.push_back({"hamilton_cayley_max_abs", max_abs(p.eval(m))});
}

std::string block_label(const JordanBlock& b) {
    std::ostringstream os;
    os << 'J' << b.size << '(' << b.eigenvalue.to_string() << ')';
    return os.str();
}

void run_jordan(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 1, "jordan <matrix-file>");
    Matrix m = load_matrix(inv.paths[0]);
    rep.inputs.push_back({"matrix", m});
    JordanDecomposition jd = jordan_form(LinearOperator(m));
    std::vector<std::string> blocks;
    for (const JordanBlock& b : jd.blocks)
        blocks.push_back(block_label(b));
    rep.results.push_back({"blocks", blocks});
    rep.results.push_back({"transform", jd.t});
    rep.results.push_back({"jordan_form", jd.j});
    Matrix residual = inverse(jd.t) * m * jd.t - jd.j;
    rep.diagnostics.push_back({"conjugation_residual_max_abs", max_abs(residual)});
}

void run_spectrum(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 1, "spectrum <matrix-file>");
    Matrix m = load_matrix(inv.paths[0]);
    rep.inputs.push_back({"matrix", m});
    SpectrumReport sp = spectrum(LinearOperator(m));
    rep.results.push_back({"characteristic_polynomial", sp.characteristic.to_string("x")});
    std::vector<std::string> roots;
    for (const auto& [root, mult] : sp.roots.entries) {
        std::ostringstream os;
        os << root.to_string() << " (multiplicity " << mult << ')';
        roots.push_back(os.str());
    }
    rep.results.push_back({"rational_eigenvalues", roots});
    rep.results.push_back({"remainder", sp.roots.remainder.to_string("x")});
    rep.results.push_back({"fully_split", std::string(yes_no(sp.fully_split))});
    if (!sp.roots.entries.empty()) {
        Rational worst(0);
        for (const auto& [root, mult] : sp.roots.entries) {
            Matrix shifted = m - Matrix::scalar(m.rows(), root);
            worst = std::max(worst, det(shifted).abs());
        }
        rep.diagnostics.push_back({"eigenvalue_determinant_max_abs", worst});
    }
    if (!sp.fully_split && inv.allow_float) {
        if (m.is_symmetric()) {
            JacobiResult jr = jacobi_eigen(m.to_doubles(), m.rows());
            rep.results.push_back({"float_eigenvalues", jr.values});
        } else {
            rep.results.push_back(
                {"float_eigenvalues", std::string("unavailable, matrix is not symmetric")});
        }
    }
}

void run_signature(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 1, "signature <form-file>");
    QuadraticForm g = load_form(inv.paths[0]);
    rep.inputs.push_back({"form", g.matrix()});
    FormDiagonalization fd = lagrange_diagonalize(g);
    Signature sig = signature(g);
    rep.results.push_back({"signature", signature_string(sig)});
    rep.results.push_back({"rank", static_cast<long>(sig.r_p + sig.r_n)});
    auto [cs, cr] = complex_signature(g);
    std::ostringstream os;
    os << "(s,r)=(" << cs << ',' << cr << ')';
    rep.results.push_back({"complex_signature", os.str()});
    Matrix residual = fd.t.transpose() * g.matrix() * fd.t - fd.d;
    rep.diagnostics.push_back({"congruence_residual_max_abs", max_abs(residual)});
}

void run_sylvester(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 1, "sylvester <form-file>");
    QuadraticForm g = load_form(inv.paths[0]);
    rep.inputs.push_back({"form", g.matrix()});
    SylvesterReport sr = sylvester_positive(g);
    rep.results.push_back({"leading_minors", sr.minors});
    rep.results.push_back({"positive_definite", std::string(yes_no(sr.positive))});
    Signature sig = signature(g);
    bool by_inertia = sig.s == 0 && sig.r_n == 0;
    rep.diagnostics.push_back({"inertia_agrees", std::string(yes_no(by_inertia == sr.positive))});
}

void run_diagonalize_form(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 1, "diagonalize-form <form-file>");
    QuadraticForm g = load_form(inv.paths[0]);
    rep.inputs.push_back({"form", g.matrix()});
    FormDiagonalization fd = lagrange_diagonalize(g);
    rep.results.push_back({"transform", fd.t});
    rep.results.push_back({"diagonal", fd.d});
    rep.results.push_back({"signature", signature_string(signature(g))});
    Matrix residual = fd.t.transpose() * g.matrix() * fd.t - fd.d;
    rep.diagnostics.push_back({"congruence_residual_max_abs", max_abs(residual)});
}

void run_subspace(const Invocation& inv, Report& rep) {
    if (inv.subcommand == "sum" || inv.subcommand == "intersect") {
        need_paths(inv, 2, 2, "subspace sum|intersect <subspace-file> <subspace-file>");
        Subspace u = load_subspace(inv.paths[0]);
        Subspace w = load_subspace(inv.paths[1]);
        if (u.ambient() != w.ambient())
            throw DimensionError("subspaces live in different ambient spaces");
        rep.inputs.push_back({"u", u.row_basis()});
        rep.inputs.push_back({"w", w.row_basis()});
        SumIntersection si = sum_and_intersection(u, w);
        const Subspace& res =
            inv.subcommand == "sum" ? si.sum : si.intersection;
        rep.results.push_back({"dimension", static_cast<long>(res.dim())});
        rep.results.push_back({"basis", res.row_basis()});
        bool grassmann = u.dim() + w.dim() == si.sum.dim() + si.intersection.dim();
        rep.diagnostics.push_back({"dimension_formula", std::string(yes_no(grassmann))});
    } else if (inv.subcommand == "quotient") {
        need_paths(inv, 1, 1, "subspace quotient <subspace-file>");
        Subspace u = load_subspace(inv.paths[0]);
        rep.inputs.push_back({"u", u.row_basis()});
        QuotientBasis qb(u);
        rep.results.push_back({"quotient_dimension", static_cast<long>(qb.quotient_dim())});
        rep.results.push_back({"coset_representatives", qb.coset_reps()});
        Matrix stacked = hcat(u.col_basis(), qb.coset_reps());
        bool spans = Subspace::span_cols(stacked).dim() == u.ambient();
        rep.diagnostics.push_back({"completion_spans", std::string(yes_no(spans))});
    } else if (inv.subcommand == "annihilator") {
        need_paths(inv, 1, 1, "subspace annihilator <subspace-file>");
        Subspace u = load_subspace(inv.paths[0]);
        rep.inputs.push_back({"u", u.row_basis()});
        DualSubspace ann = annihilator(u);
        rep.results.push_back({"dimension", static_cast<long>(ann.dim())});
        rep.results.push_back({"functionals", ann.row_basis()});
        Rational pairing(0);
        if (ann.dim() > 0 && u.dim() > 0)
            pairing = max_abs(ann.row_basis() * u.col_basis());
        rep.diagnostics.push_back({"pairing_max_abs", pairing});
    } else {
        throw ParseError("unknown subspace operation '" + inv.subcommand + "'");
    }
}

void run_adjoint(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 2, "adjoint <matrix-file> [<form-file>]");
    Matrix f = load_matrix(inv.paths[0]);
    rep.inputs.push_back({"matrix", f});
    EuclideanStructure e = inv.paths.size() == 2
                               ? EuclideanStructure(load_form(inv.paths[1]))
                               : EuclideanStructure::standard(f.rows());
    if (inv.paths.size() == 2)
        rep.inputs.push_back({"metric", e.metric()});
    Matrix adj = adjoint(f, e);
    rep.results.push_back({"adjoint", adj});
    Matrix residual = adj.transpose() * e.metric() - e.metric() * f;
    rep.diagnostics.push_back({"defining_identity_max_abs", max_abs(residual)});
}

FloatMatrix float_matrix(std::size_t n, const std::vector<double>& rowmajor) {
    return {n, n, rowmajor};
}

// Row-major n x n helpers for the float-tier reconstruction check.
std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b,
                           std::size_t n) {
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] += a[i * n + k] * b[k * n + j];
    return c;
}

std::vector<double> mattrans(const std::vector<double>& a, std::size_t n) {
    std::vector<double> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t[j * n + i] = a[i * n + j];
    return t;
}

void run_rotation(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 1, "rotation <matrix-file>");
    Matrix f = load_matrix(inv.paths[0]);
    rep.inputs.push_back({"matrix", f});
    RotationForm rf = rotation_canonical(f);
    rep.results.push_back({"angle_radians", rf.angle});
    if (rf.dim == 3)
        rep.results.push_back({"axis", rf.axis});
    rep.results.push_back({"canonical", float_matrix(rf.dim, rf.canonical)});
    rep.results.push_back({"frame", float_matrix(rf.dim, rf.frame)});

    std::vector<double> fd = f.to_doubles();
    std::vector<double> rebuilt =
        rf.dim == 2 ? rf.canonical
                    : matmul(matmul(rf.frame, rf.canonical, 3), mattrans(rf.frame, 3), 3);
    double worst = 0;
    for (std::size_t i = 0; i < fd.size(); ++i)
        worst = std::max(worst, std::fabs(fd[i] - rebuilt[i]));
    rep.diagnostics.push_back({"reconstruction_max_abs", worst});
    if (rf.dim == 3) {
        bool fixed = f * rf.axis == rf.axis;
        rep.diagnostics.push_back({"axis_fixed_exactly", std::string(yes_no(fixed))});
    }
}

std::string rhs_string(const CanonicalEquation& ce, std::size_t reduced_dim) {
    switch (ce.rhs) {
    case CanonicalEquation::Rhs::plus_one: return "1";
    case CanonicalEquation::Rhs::minus_one: return "-1";
    case CanonicalEquation::Rhs::zero: return "0";
    case CanonicalEquation::Rhs::linear: {
        std::ostringstream os;
        os << "2*x" << reduced_dim;
        return os.str();
    }
    }
    return "?";
}

std::string equation_string(const CanonicalEquation& ce, std::size_t reduced_dim) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < ce.terms.size(); ++i) {
        bool negative = ce.exact ? ce.exact_terms[i].sign() < 0 : ce.terms[i] < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::string coeff;
        if (ce.exact) {
            Rational a = ce.exact_terms[i].abs();
            if (a != Rational(1))
                coeff = a.to_string() + "*";
        } else {
            coeff = format_double(std::fabs(ce.terms[i])) + "*";
        }
        os << coeff << 'x' << i + 1 << "^2";
    }
    if (first)
        os << '0';
    os << " = " << rhs_string(ce, reduced_dim);
    return os.str();
}

void push_canonical(Report& rep, const CanonicalEquation& ce, std::size_t reduced_dim) {
    rep.results.push_back({"mode", std::string(ce.exact ? "exact" : "float")});
    if (ce.exact)
        rep.results.push_back({"terms", ce.exact_terms});
    else
        rep.results.push_back({"terms", ce.terms});
    rep.results.push_back({"rhs", rhs_string(ce, reduced_dim)});
    rep.results.push_back({"equation", equation_string(ce, reduced_dim)});
}

void run_quadric(const Invocation& inv, Report& rep) {
    need_paths(inv, 1, 1, "quadric classify|canonical <quadric-file>");
    Quadric q = load_quadric(inv.paths[0]);
    rep.inputs.push_back({"a", q.a()});
    rep.inputs.push_back({"b", q.b()});
    rep.inputs.push_back({"c", q.c()});
    if (inv.subcommand == "classify") {
        QuadricClass qc = quadric_classify(q);
        rep.results.push_back({"kind", std::string(to_string(qc.kind))});
        rep.results.push_back({"terminal_kind", std::string(to_string(qc.terminal_kind))});
        rep.results.push_back({"reduced_dimension", static_cast<long>(qc.reduced_dim)});
        rep.results.push_back({"signature", signature_string(qc.signature_a)});
        rep.results.push_back({"residual_constant", qc.residual_constant});
        rep.results.push_back({"empty_locus", std::string(yes_no(qc.empty_locus))});
        push_canonical(rep, qc.canonical, qc.reduced_dim);
        QuadricReduction red = quadric_reduce(q);
        Matrix center_residual = q.a() * red.shift + red.b2;
        rep.diagnostics.push_back({"center_equation_max_abs", max_abs(center_residual)});
    } else if (inv.subcommand == "canonical") {
        QuadricClass qc = quadric_classify(q);
        if (!qc.canonical.exact && !inv.allow_float)
            throw DomainError(
                "canonical coefficients are irrational; rerun with --float");
        push_canonical(rep, qc.canonical, qc.reduced_dim);
    } else {
        throw ParseError("unknown quadric operation '" + inv.subcommand + "'");
    }
}

void run_frame_change(const Invocation& inv, Report& rep) {
    need_paths(inv, 3, 3, "frame-change <point-file> <frame-file> <frame-file>");
    Matrix x = load_matrix(inv.paths[0]);
    if (x.cols() != 1)
        throw DimensionError("point must be a single column");
    Frame old_frame = load_frame(inv.paths[1]);
    Frame new_frame = load_frame(inv.paths[2]);
    rep.inputs.push_back({"point", x});
    rep.inputs.push_back({"old_origin", old_frame.origin});
    rep.inputs.push_back({"old_basis", old_frame.basis.vectors()});
    rep.inputs.push_back({"new_origin", new_frame.origin});
    rep.inputs.push_back({"new_basis", new_frame.basis.vectors()});
    Matrix out = change_frame(x, old_frame, new_frame);
    rep.results.push_back({"coordinates", out});
    Matrix back = change_frame(out, new_frame, old_frame);
    rep.diagnostics.push_back({"round_trip_max_abs", max_abs(back - x)});
}

} // namespace

Report run_command(const Invocation& inv) {
    Report rep;
    rep.command = inv.command;
    if (!inv.subcommand.empty())
        rep.command += " " + inv.subcommand;

    if (inv.command == "charpoly")
        run_charpoly(inv, rep);
    else if (inv.command == "jordan")
        run_jordan(inv, rep);
    else if (inv.command == "spectrum")
        run_spectrum(inv, rep);
    else if (inv.command == "signature")
        run_signature(inv, rep);
    else if (inv.command == "sylvester")
        run_sylvester(inv, rep);
    else if (inv.command == "diagonalize-form")
        run_diagonalize_form(inv, rep);
    else if (inv.command == "subspace")
        run_subspace(inv, rep);
    else if (inv.command == "adjoint")
        run_adjoint(inv, rep);
    else if (inv.command == "rotation")
        run_rotation(inv, rep);
    else if (inv.command == "quadric")
        run_quadric(inv, rep);
    else if (inv.command == "frame-change")
        run_frame_change(inv, rep);
    else
        throw ParseError("unknown command '" + inv.command + "'");
    return rep;
}

} // namespace qlin
