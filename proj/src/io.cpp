#include "imag/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace imag {

namespace {

using nlohmann::json;

json parse_stream(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseFailed(std::string("JSON parse error: ") + e.what());
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseFailed("cannot open file: " + path);
    }
    return in;
}

double number_at(const json& j, const char* context) {
    if (!j.is_number()) {
        throw ParseFailed(std::string(context) + ": expected a number");
    }
    return j.get<double>();
}

Eigen::Index index_at(const json& j, const char* context) {
    if (!j.is_number_integer()) {
        throw ParseFailed(std::string(context) + ": expected an integer");
    }
    return j.get<Eigen::Index>();
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

DensityMatrix load_state_json(std::istream& in) {
    json j = parse_stream(in);
    if (!j.is_object() || !j.contains("dim") || !j.contains("matrix")) {
        throw ParseFailed("state file: expected object with \"dim\" and \"matrix\"");
    }
    const Eigen::Index d = index_at(j["dim"], "state file dim");
    if (d < 1) throw ParseFailed("state file: dim must be >= 1");
    const json& rows = j["matrix"];
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
        throw ParseFailed("state file: \"matrix\" must have dim rows");
    }
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
            throw ParseFailed("state file: each row must have dim entries");
        }
        for (Eigen::Index c = 0; c < d; ++c) {
            const json& entry = row[static_cast<std::size_t>(c)];
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseFailed("state file: each entry must be [re, im]");
            }
            const double re = number_at(entry[0], "state entry");
            const double im = number_at(entry[1], "state entry");
            if (!std::isfinite(re) || !std::isfinite(im)) {
                throw ParseFailed("state file: entries must be finite");
            }
            m(r, c) = std::complex<double>(re, im);
        }
    }
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix load_state_json_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return load_state_json(in);
}

std::string state_to_json(const DensityMatrix& rho) {
    std::ostringstream os;
    os << "{\"dim\": " << rho.dim() << ", \"matrix\": [";
    for (Eigen::Index r = 0; r < rho.dim(); ++r) {
        if (r) os << ", ";
        os << "[";
        for (Eigen::Index c = 0; c < rho.dim(); ++c) {
            if (c) os << ", ";
            os << "[" << format_double(rho.matrix()(r, c).real()) << ", "
               << format_double(rho.matrix()(r, c).imag()) << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

RealOperation load_operation_json(std::istream& in) {
    json j = parse_stream(in);
    if (!j.is_object() || !j.contains("dim") || !j.contains("kraus")) {
        throw ParseFailed("operation file: expected object with \"dim\" and \"kraus\"");
    }
    const Eigen::Index d = index_at(j["dim"], "operation file dim");
    if (d < 1) throw ParseFailed("operation file: dim must be >= 1");
    const json& list = j["kraus"];
    if (!list.is_array() || list.empty()) {
        throw ParseFailed("operation file: \"kraus\" must be a nonempty array");
    }
    std::vector<RealMatrix> kraus;
    kraus.reserve(list.size());
    for (const json& jm : list) {
        if (!jm.is_array() || static_cast<Eigen::Index>(jm.size()) != d) {
            throw ParseFailed("operation file: each Kraus matrix must have dim rows");
        }
        RealMatrix k(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
            const json& row = jm[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
                throw ParseFailed("operation file: each row must have dim entries");
            }
            for (Eigen::Index c = 0; c < d; ++c) {
                k(r, c) = number_at(row[static_cast<std::size_t>(c)], "kraus entry");
            }
        }
        kraus.push_back(std::move(k));
    }
    return RealOperation::from_kraus(std::move(kraus));
}

RealOperation load_operation_json_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return load_operation_json(in);
}

std::string operation_to_json(const RealOperation& op) {
    std::ostringstream os;
    os << "{\"dim\": " << op.dim() << ", \"kraus\": [";
    for (std::size_t l = 0; l < op.kraus().size(); ++l) {
        if (l) os << ", ";
        const RealMatrix& k = op.kraus()[l];
        os << "[";
        for (Eigen::Index r = 0; r < k.rows(); ++r) {
            if (r) os << ", ";
            os << "[";
            for (Eigen::Index c = 0; c < k.cols(); ++c) {
                if (c) os << ", ";
                os << format_double(k(r, c));
            }
            os << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

GaussianState load_gaussian_json(std::istream& in) {
    json j = parse_stream(in);
    if (!j.is_object() || !j.contains("modes") || !j.contains("mean") || !j.contains("cov")) {
        throw ParseFailed("gaussian file: expected object with \"modes\", \"mean\", \"cov\"");
    }
    const Eigen::Index n = index_at(j["modes"], "gaussian file modes");
    if (n < 1) throw ParseFailed("gaussian file: modes must be >= 1");
    const json& jmean = j["mean"];
    if (!jmean.is_array() || static_cast<Eigen::Index>(jmean.size()) != 2 * n) {
        throw ParseFailed("gaussian file: \"mean\" must have 2*modes entries");
    }
    RealVector mean(2 * n);
    for (Eigen::Index i = 0; i < 2 * n; ++i) {
        mean[i] = number_at(jmean[static_cast<std::size_t>(i)], "mean entry");
    }
    const json& jcov = j["cov"];
    if (!jcov.is_array() || static_cast<Eigen::Index>(jcov.size()) != 2 * n) {
        throw ParseFailed("gaussian file: \"cov\" must be a 2N x 2N matrix");
    }
    RealMatrix cov(2 * n, 2 * n);
    for (Eigen::Index r = 0; r < 2 * n; ++r) {
        const json& row = jcov[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != 2 * n) {
            throw ParseFailed("gaussian file: \"cov\" must be a 2N x 2N matrix");
        }
        for (Eigen::Index c = 0; c < 2 * n; ++c) {
            cov(r, c) = number_at(row[static_cast<std::size_t>(c)], "cov entry");
        }
    }
    return GaussianState::from_parts(n, std::move(mean), std::move(cov));
}

GaussianState load_gaussian_json_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return load_gaussian_json(in);
}

std::string gaussian_to_json(const GaussianState& g) {
    std::ostringstream os;
    os << "{\"modes\": " << g.modes() << ", \"mean\": [";
    for (Eigen::Index i = 0; i < g.mean().size(); ++i) {
        if (i) os << ", ";
        os << format_double(g.mean()[i]);
    }
    os << "], \"cov\": [";
    for (Eigen::Index r = 0; r < g.cov().rows(); ++r) {
        if (r) os << ", ";
        os << "[";
        for (Eigen::Index c = 0; c < g.cov().cols(); ++c) {
            if (c) os << ", ";
            os << format_double(g.cov()(r, c));
        }
        os << "]";
    }
    os << "], \"convention\": \"q=a+ad, p=-i(a-ad)\"}";
    return os.str();
}

} // namespace imag
