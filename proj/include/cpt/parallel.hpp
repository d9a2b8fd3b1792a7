#ifndef CPT_PARALLEL_HPP
#define CPT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace cpt {

/**
 * results[i] = task(i) for i in [0, count), computed by up to `jobs` threads.
 * Results are stored by index, so the output does not depend on scheduling.
 * If tasks throw, the exception of the smallest failing index is rethrown.
 */
template <typename Result, typename Task>
std::vector<Result> parallel_map(std::size_t count, int jobs, Task&& task)
{
    std::vector<std::optional<Result> > slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < count; i = next++)
        {
            try
            {
                slots[i].emplace(task(i));
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
    if (threads <= 1)
        worker();
    else
    {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<Result> results;
    results.reserve(count);
    for (auto& s : slots)
        results.push_back(std::move(*s));
    return results;
}

}   // namespace cpt

#endif
