#include "nccube/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nccube {

std::string formatDouble(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void escapeString(const std::string& s, std::string& out) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\t':
                out += "\\t";
                break;
            case '\r':
                out += "\\r";
                break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void dumpRec(const Json& j, int indent, int depth, std::string& out) {
    const std::string pad(static_cast<size_t>(indent * depth), ' ');
    const std::string padIn(static_cast<size_t>(indent * (depth + 1)), ' ');
    switch (j.type()) {
        case nlohmann::detail::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += padIn;
                escapeString(it.key(), out);
                out += ": ";
                dumpRec(it.value(), indent, depth + 1, out);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // compact arrays of numbers, expanded arrays of structures
            bool scalarOnly = true;
            for (const auto& v : j)
                if (v.is_structured()) scalarOnly = false;
            if (scalarOnly) {
                out += "[";
                for (size_t i = 0; i < j.size(); ++i) {
                    dumpRec(j[i], indent, depth, out);
                    if (i + 1 < j.size()) out += ", ";
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                out += padIn;
                dumpRec(j[i], indent, depth + 1, out);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            return;
        }
        case nlohmann::detail::value_t::string:
            escapeString(j.get<std::string>(), out);
            return;
        case nlohmann::detail::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case nlohmann::detail::value_t::number_integer:
            out += std::to_string(j.get<int64_t>());
            return;
        case nlohmann::detail::value_t::number_unsigned:
            out += std::to_string(j.get<uint64_t>());
            return;
        case nlohmann::detail::value_t::number_float:
            out += formatDouble(j.get<double>());
            return;
        default:
            out += "null";
            return;
    }
}

SystemId systemFromString(const std::string& s, int n) {
    if (s == "NC") return {SystemKind::NCCube, n};
    if (s == "S2") return {SystemKind::UnitaryGen, 2};
    if (s == "T") return {SystemKind::Tridiagonal, n};
    if (s == "R") return {SystemKind::Arrow, n};
    if (s == "C2n") return {SystemKind::CubeVector, n};
    throw InvalidInput("unknown system string: " + s + " (expected NC, S2, T, R or C2n)");
}

std::string systemToString(const SystemId& id) {
    switch (id.kind) {
        case SystemKind::NCCube:
            return "NC";
        case SystemKind::UnitaryGen:
            return "S2";
        case SystemKind::Tridiagonal:
            return "T";
        case SystemKind::Arrow:
            return "R";
        case SystemKind::CubeVector:
            return "C2n";
        default:
            throw InvalidInput("system " + id.str() + " has no file representation");
    }
}

}  // namespace

std::string dumpJson(const Json& j, int indent) {
    std::string out;
    dumpRec(j, indent, 0, out);
    out += "\n";
    return out;
}

Json matrixToJson(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrixFromJson(const Json& j) {
    if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a nonempty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[static_cast<size_t>(i)].is_array() || static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
            throw InvalidInput("ragged matrix rows");
        for (int c = 0; c < cols; ++c) {
            const Json& cell = j[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (!cell.is_array() || cell.size() != 2) throw InvalidInput("matrix entries must be [re, im] pairs");
            m(i, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    if (!m.allFinite()) throw InvalidInput("non-finite matrix entry");
    return m;
}

Json elementToJson(const TensorElement& x) {
    Json j;
    j["format"] = 1;
    j["system"] = systemToString(x.system);
    j["n"] = x.system.n;
    j["k"] = x.k;
    Json coeffs;
    for (const auto& label : x.system.basisLabels()) {
        const auto it = x.coeffs.find(label);
        if (it != x.coeffs.end()) coeffs[label] = matrixToJson(it->second);
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

TensorElement elementFromJson(const Json& j) {
    if (!j.is_object()) throw InvalidInput("element file must be a JSON object");
    if (!j.contains("format") || j["format"].get<int>() != 1) throw InvalidInput("unsupported element file format");
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    if (n < 1 || k < 1) throw InvalidInput("element file needs n >= 1 and k >= 1");
    const SystemId sys = systemFromString(j.at("system").get<std::string>(), n);

    TensorElement x = TensorElement::zero(sys, k);
    const auto labels = sys.basisLabels();
    if (!j.contains("coeffs") || !j["coeffs"].is_object()) throw InvalidInput("element file needs a coeffs object");
    for (auto it = j["coeffs"].begin(); it != j["coeffs"].end(); ++it) {
        if (std::find(labels.begin(), labels.end(), it.key()) == labels.end())
            throw InvalidInput("unknown coefficient label '" + it.key() + "' for system " + sys.str());
        ComplexMatrix m = matrixFromJson(it.value());
        if (m.rows() != k || m.cols() != k) throw InvalidInput("coefficient block " + it.key() + " is not k x k");
        x.coeffs[it.key()] = std::move(m);
    }

    // symmetrise Hermitian blocks; reject asymmetry beyond 1e-8
    const auto symmetrise = [&](const std::string& label) {
        const auto it = x.coeffs.find(label);
        if (it == x.coeffs.end()) return;
        if (it->second.hermitianDefect() > 1e-8)
            throw InvalidInput("coefficient block " + label + " deviates from Hermitian beyond 1e-8");
        it->second = HermitianMatrix(it->second).mat();
    };
    switch (sys.kind) {
        case SystemKind::NCCube:
        case SystemKind::CubeVector:
            for (const auto& label : labels) symmetrise(label);
            break;
        case SystemKind::UnitaryGen:
            symmetrise("1");
            break;
        case SystemKind::Tridiagonal:
        case SystemKind::Arrow: {
            const int m = sys.matrixDim();
            for (int i = 1; i <= m; ++i) symmetrise("E_" + std::to_string(i) + "_" + std::to_string(i));
            for (int i = 1; i <= m; ++i)
                for (int jj = i + 1; jj <= m; ++jj) {
                    const std::string lab = "E_" + std::to_string(i) + "_" + std::to_string(jj);
                    const std::string adj = "E_" + std::to_string(jj) + "_" + std::to_string(i);
                    if (!x.coeffs.count(lab) && !x.coeffs.count(adj)) continue;
                    const ComplexMatrix diff = x.coeff(lab) - x.coeff(adj).adjoint();
                    if (diff.maxAbsEntry() > 1e-8)
                        throw InvalidInput("off-diagonal blocks " + lab + "/" + adj + " are not mutually adjoint");
                    const ComplexMatrix avg = (x.coeff(lab) + x.coeff(adj).adjoint()) * Complex(0.5, 0);
                    x.coeffs[lab] = avg;
                    x.coeffs[adj] = avg.adjoint();
                }
            break;
        }
        default:
            break;
    }
    x.validate();
    return x;
}

TensorElement loadElementFile(const std::string& path) {
    Json j;
    try {
        j = Json::parse(readTextFile(path));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("cannot parse ") + path + ": " + e.what());
    }
    return elementFromJson(j);
}

void writeTextFile(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open " + path + " for writing");
    f << content;
    if (!f) throw InvalidInput("write failed for " + path);
}

std::string readTextFile(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace nccube
