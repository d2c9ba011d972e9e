#include "phaseret/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace phaseret::fft {

namespace {

// fftw_plan_dft_2d is not thread-safe; execution of a finished plan is.
// Plans are created once per (rows, cols, sign) with FFTW_UNALIGNED so they
// can be re-executed on any caller buffer.
class PlanCache {
public:
    fftw_plan get(std::size_t rows, std::size_t cols, int sign) {
        const Key key{rows, cols, sign};
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<fftw_complex> scratch(rows * cols);
        fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols),
                                          scratch.data(), scratch.data(), sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) {
            throw std::runtime_error("fft: planning failed");
        }
        plans_.emplace(key, plan);
        return plan;
    }

private:
    struct Key {
        std::size_t rows, cols;
        int sign;
        bool operator<(const Key& o) const {
            if (rows != o.rows) return rows < o.rows;
            if (cols != o.cols) return cols < o.cols;
            return sign < o.sign;
        }
    };
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(std::size_t rows, std::size_t cols, int sign, Complex* data) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("fft: empty grid");
    }
    fftw_plan plan = cache().get(rows, cols, sign);
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, raw, raw);
    const double scale = 1.0 / std::sqrt(static_cast<double>(rows * cols));
    const std::size_t n = rows * cols;
    for (std::size_t k = 0; k < n; ++k) data[k] *= scale;
}

}  // namespace

void forward(std::size_t rows, std::size_t cols, Complex* data) {
    execute(rows, cols, FFTW_FORWARD, data);
}

void inverse(std::size_t rows, std::size_t cols, Complex* data) {
    execute(rows, cols, FFTW_BACKWARD, data);
}

}  // namespace phaseret::fft
