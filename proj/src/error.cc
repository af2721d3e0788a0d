/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/error.hh>

using namespace apg;

auto apg::error_kind_name(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::Syntax:               return "SyntaxError";
        case ErrorKind::InvalidName:          return "InvalidName";
        case ErrorKind::UndeclaredNode:       return "UndeclaredNode";
        case ErrorKind::DuplicateChild:       return "DuplicateChild";
        case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
        case ErrorKind::NotAccessible:        return "NotAccessible";
        case ErrorKind::UnknownNode:          return "UnknownNode";
        case ErrorKind::CyclicGraph:          return "CyclicGraph";
        case ErrorKind::IncompleteMap:        return "IncompleteMap";
        case ErrorKind::UnknownRelation:      return "UnknownRelation";
        case ErrorKind::NotABisimulation:     return "NotABisimulation";
        case ErrorKind::UndefinedVariable:    return "UndefinedVariable";
        case ErrorKind::NoRoot:               return "NoRoot";
        case ErrorKind::NotTotal:             return "NotTotal";
    }
    return "Error";
}

ApgError::ApgError(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string{ error_kind_name(kind) } + ": " + message),
    _kind(kind)
{
}
