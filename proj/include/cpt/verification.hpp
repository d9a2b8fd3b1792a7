#ifndef CPT_VERIFICATION_HPP
#define CPT_VERIFICATION_HPP

#include <stdexcept>
#include <string>

namespace cpt {

/**
 * A theorem-level assertion was falsified. `witness` carries the offending
 * input serialized as JSON text, when one is available.
 */
class VerificationFailure : public std::runtime_error
{
    public:
        explicit VerificationFailure(const std::string& what, std::string witness = "{}")
            : std::runtime_error(what), witness_(std::move(witness))
        {
        }

        const std::string& witness() const { return witness_; }

    private:
        std::string witness_;
};

}   // namespace cpt

#endif
