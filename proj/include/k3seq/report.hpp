#pragma once

#include <string>
#include <vector>

namespace k3seq {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Result of one named verification bundle: a flat list of assertions.
struct CheckGroup {
    std::vector<CheckItem> items;

    bool ok() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }

    void require(const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back({name, pass, detail});
    }

    std::string first_failure() const {
        for (const auto& i : items)
            if (!i.pass) return i.name + (i.detail.empty() ? "" : ": " + i.detail);
        return {};
    }

    void merge(const CheckGroup& other, const std::string& prefix = "") {
        for (const auto& i : other.items)
            items.push_back({prefix.empty() ? i.name : prefix + "." + i.name,
                             i.pass, i.detail});
    }
};

}  // namespace k3seq
