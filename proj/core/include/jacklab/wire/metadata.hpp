#pragma once

#include <string>
#include <vector>

#include "jacklab/bytes.hpp"

namespace jacklab::wire {

// The per-job record the printer pushes on its metadata side channel.
struct PrintJobMetadata {
    std::string username;
    std::string userid;
    std::string hostid;
    std::string jobname;
    std::string printer_model;

    bool operator==(const PrintJobMetadata&) const = default;
    bool complete() const {
        return !username.empty() && !userid.empty() && !hostid.empty() && !jobname.empty() &&
               !printer_model.empty();
    }
};

// Wire form: USERNAME=, USERID=, HOSTID=, JOBNAME=, MODEL= lines, one blank
// line after each record.
std::string encode_metadata(const PrintJobMetadata& meta);
std::vector<PrintJobMetadata> parse_metadata_stream(std::string_view text);

} // namespace jacklab::wire
