#include "iurlab/benchmarks.hpp"

#include "iurlab/errors.hpp"

#include <Eigen/QR>

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace iurlab::benchmarks {

namespace {

constexpr double kOrthogonalityTolerance = 1e-10;

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Line-oriented tokenizer that skips blank and comment lines.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-empty line split into tokens; false at end of input.
    bool next(std::vector<std::string>& tokens)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_number_;
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#')
                continue;
            std::istringstream fields(line);
            tokens.clear();
            for (std::string token; fields >> token;)
                tokens.push_back(token);
            return true;
        }
        return false;
    }

    std::size_t line_number() const { return line_number_; }

private:
    std::istream& in_;
    std::size_t line_number_ = 0;
};

[[noreturn]] void fail(const LineReader& reader, const std::string& block, const std::string& message)
{
    throw ParseError(block + ": " + message, reader.line_number());
}

std::vector<std::string> expect_line(LineReader& reader, const std::string& block)
{
    std::vector<std::string> tokens;
    if (!reader.next(tokens))
        fail(reader, block, "unexpected end of file");
    return tokens;
}

void expect_keyword(LineReader& reader, const std::string& keyword, const std::string& block)
{
    const auto tokens = expect_line(reader, block);
    if (tokens.size() != 1 || tokens[0] != keyword)
        fail(reader, block, "expected '" + keyword + "'");
}

double parse_double(const LineReader& reader, const std::string& token, const std::string& block)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size())
            throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        fail(reader, block, "'" + token + "' is not a number");
    }
}

long parse_integer(const LineReader& reader, const std::string& token, const std::string& block)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(token, &used);
        if (used != token.size())
            throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        fail(reader, block, "'" + token + "' is not an integer");
    }
}

Eigen::VectorXd read_row(LineReader& reader, Eigen::Index d, const std::string& block)
{
    const auto tokens = expect_line(reader, block);
    if (static_cast<Eigen::Index>(tokens.size()) != d)
        fail(reader, block, "expected " + std::to_string(d) + " numbers, found " + std::to_string(tokens.size()));
    Eigen::VectorXd row(d);
    for (Eigen::Index j = 0; j < d; ++j)
        row[j] = parse_double(reader, tokens[static_cast<std::size_t>(j)], block);
    return row;
}

} // namespace

Eigen::MatrixXd random_rotation(Eigen::Index d, Rng& rng)
{
    Eigen::MatrixXd gaussian(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i)
            gaussian(i, j) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
    const Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j)
        if (R(j, j) < 0.0)
            Q.col(j) = -Q.col(j);
    return Q;
}

double orthogonality_error(const Eigen::MatrixXd& R)
{
    if (R.rows() != R.cols())
        return std::numeric_limits<double>::infinity();
    return (R.transpose() * R - Eigen::MatrixXd::Identity(R.rows(), R.cols())).cwiseAbs().maxCoeff();
}

SuiteData generate_suite_data(Eigen::Index d, std::uint64_t seed)
{
    if (d < 2)
        throw DomainError("suite dimension must be >= 2");
    SuiteData data;
    data.dimension = d;
    data.seed = seed;
    const Eigen::VectorXd lo = Eigen::VectorXd::Constant(d, -kShiftBound);
    const Eigen::VectorXd hi = Eigen::VectorXd::Constant(d, kShiftBound);
    for (int id = 1; id <= kFunctionCount; ++id) {
        const FunctionInfo& info = function_info(id);
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(id)));
        FunctionData fd;
        for (std::size_t block = 0; block < info.data_blocks(); ++block) {
            const bool rotated = info.composition() ? info.components[block].rotated : info.rotated;
            fd.shifts.push_back(rng.uniform_vector(lo, hi));
            fd.rotations.push_back(rotated ? random_rotation(d, rng) : Eigen::MatrixXd::Identity(d, d));
        }
        data.functions.push_back(std::move(fd));
    }
    return data;
}

void validate_suite_data(const SuiteData& data)
{
    if (data.dimension < 2)
        throw ValidationError("suite dimension must be >= 2");
    if (data.functions.size() != static_cast<std::size_t>(kFunctionCount))
        throw ValidationError("suite data must hold 28 functions");
    for (int id = 1; id <= kFunctionCount; ++id) {
        const FunctionInfo& info = function_info(id);
        const FunctionData& fd = data.functions[static_cast<std::size_t>(id - 1)];
        const std::string where = "f" + std::to_string(id);
        if (fd.shifts.size() != info.data_blocks() || fd.rotations.size() != info.data_blocks())
            throw ValidationError(where + ": expected " + std::to_string(info.data_blocks()) + " shift/rotation blocks");
        for (std::size_t b = 0; b < info.data_blocks(); ++b) {
            if (fd.shifts[b].size() != data.dimension)
                throw ValidationError(where + ": shift has the wrong dimension");
            if (fd.rotations[b].rows() != data.dimension || fd.rotations[b].cols() != data.dimension)
                throw ValidationError(where + ": rotation has the wrong shape");
            const double error = orthogonality_error(fd.rotations[b]);
            if (!(error <= kOrthogonalityTolerance))
                throw ValidationError(where + ": rotation " + std::to_string(b + 1) +
                                      " is not orthogonal (max |R^T R - I| = " + format_number(error) + ")");
        }
    }
}

void write_suite_data(const SuiteData& data, std::ostream& out)
{
    out << "# iurlab suite data";
    if (!data.external)
        out << ", seed " << data.seed;
    out << "\n";
    out << "dimension " << data.dimension << "\n";
    for (std::size_t f = 0; f < data.functions.size(); ++f) {
        const FunctionData& fd = data.functions[f];
        out << "function " << f + 1 << " components " << fd.shifts.size() << "\n";
        for (std::size_t b = 0; b < fd.shifts.size(); ++b) {
            out << "shift\n";
            for (Eigen::Index j = 0; j < fd.shifts[b].size(); ++j)
                out << (j ? " " : "") << format_number(fd.shifts[b][j]);
            out << "\nrotation\n";
            const Eigen::MatrixXd& R = fd.rotations[b];
            for (Eigen::Index i = 0; i < R.rows(); ++i) {
                for (Eigen::Index j = 0; j < R.cols(); ++j)
                    out << (j ? " " : "") << format_number(R(i, j));
                out << "\n";
            }
        }
        out << "end\n";
    }
    if (!out)
        throw IoError("failed to write suite data");
}

SuiteData read_suite_data(std::istream& in)
{
    LineReader reader(in);
    SuiteData data;
    data.external = true;

    auto header = expect_line(reader, "header");
    if (header.size() != 2 || header[0] != "dimension")
        fail(reader, "header", "expected 'dimension <d>'");
    const long d = parse_integer(reader, header[1], "header");
    if (d < 2)
        fail(reader, "header", "dimension must be >= 2");
    data.dimension = d;

    for (int id = 1; id <= kFunctionCount; ++id) {
        const std::string fblock = "function " + std::to_string(id);
        auto line = expect_line(reader, fblock);
        if (line.size() != 4 || line[0] != "function" || line[2] != "components")
            fail(reader, fblock, "expected 'function " + std::to_string(id) + " components <k>'");
        if (parse_integer(reader, line[1], fblock) != id)
            fail(reader, fblock, "functions must appear in order 1..28");
        const long k = parse_integer(reader, line[3], fblock);
        if (k != static_cast<long>(function_info(id).data_blocks()))
            fail(reader, fblock, "expected " + std::to_string(function_info(id).data_blocks()) + " components");

        FunctionData fd;
        for (long b = 1; b <= k; ++b) {
            const std::string sblock = fblock + " shift " + std::to_string(b);
            expect_keyword(reader, "shift", sblock);
            fd.shifts.push_back(read_row(reader, d, sblock));

            const std::string rblock = fblock + " rotation " + std::to_string(b);
            expect_keyword(reader, "rotation", rblock);
            Eigen::MatrixXd R(d, d);
            for (long i = 0; i < d; ++i)
                R.row(i) = read_row(reader, d, rblock).transpose();
            fd.rotations.push_back(std::move(R));
        }
        expect_keyword(reader, "end", fblock);
        data.functions.push_back(std::move(fd));
    }
    std::vector<std::string> trailing;
    if (reader.next(trailing))
        fail(reader, "trailer", "unexpected content after function 28");

    validate_suite_data(data);
    return data;
}

SuiteData load_external_data(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open suite data file '" + path.string() + "'");
    return read_suite_data(in);
}

} // namespace iurlab::benchmarks
