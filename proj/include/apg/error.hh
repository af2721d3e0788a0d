/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_ERROR_HH
#define APG_GUARD_ERROR_HH 1

#include <stdexcept>
#include <string>
#include <string_view>

namespace apg
{
    enum class ErrorKind
    {
        Syntax,
        InvalidName,
        UndeclaredNode,
        DuplicateChild,
        DuplicateDeclaration,
        NotAccessible,
        UnknownNode,
        CyclicGraph,
        IncompleteMap,
        UnknownRelation,
        NotABisimulation,
        UndefinedVariable,
        NoRoot,
        NotTotal
    };

    auto error_kind_name(ErrorKind kind) -> std::string_view;

    /**
     * Every failure raised by the library. The kind lets callers (the CLI in
     * particular) distinguish bad input from violated preconditions without
     * parsing messages.
     */
    class ApgError : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            ApgError(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind
            {
                return _kind;
            }
    };
}

#endif
