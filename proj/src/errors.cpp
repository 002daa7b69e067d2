#include "lifecycle/errors.hpp"

namespace lifecycle {

const char* to_string(IssueKind kind) {
    switch (kind) {
        case IssueKind::RowSumError: return "RowSumError";
        case IssueKind::NegativeProbability: return "NegativeProbability";
        case IssueKind::ShapeMismatch: return "ShapeMismatch";
        case IssueKind::EmptyActionSet: return "EmptyActionSet";
        case IssueKind::NonFiniteNumber: return "NonFiniteNumber";
    }
    return "UnknownIssue";
}

std::string Issue::message() const {
    std::string text = to_string(kind);
    if (!where.empty()) {
        text += " at " + where;
    }
    if (!detail.empty()) {
        text += ": " + detail;
    }
    return text;
}

namespace {

std::string join_messages(const std::vector<Issue>& issues) {
    std::string text = "validation failed (" + std::to_string(issues.size()) + " issue" +
                       (issues.size() == 1 ? "" : "s") + ")";
    for (const auto& issue : issues) {
        text += "\n  - " + issue.message();
    }
    return text;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> found)
    : Error(join_messages(found)), issues(std::move(found)) {}

}  // namespace lifecycle
