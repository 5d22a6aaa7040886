#include "jacklab/wire/metadata.hpp"

namespace jacklab::wire {

std::string encode_metadata(const PrintJobMetadata& meta) {
    std::string out;
    out.append("USERNAME=").append(meta.username).push_back('\n');
    out.append("USERID=").append(meta.userid).push_back('\n');
    out.append("HOSTID=").append(meta.hostid).push_back('\n');
    out.append("JOBNAME=").append(meta.jobname).push_back('\n');
    out.append("MODEL=").append(meta.printer_model).push_back('\n');
    out.push_back('\n');
    return out;
}

std::vector<PrintJobMetadata> parse_metadata_stream(std::string_view text) {
    std::vector<PrintJobMetadata> out;
    PrintJobMetadata current;
    bool any_field = false;
    std::size_t pos = 0;
    auto flush = [&] {
        if (any_field)
            out.push_back(current);
        current = {};
        any_field = false;
    };
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == text.npos ? text.npos : nl - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty()) {
            flush();
        } else {
            std::size_t eq = line.find('=');
            if (eq != line.npos) {
                std::string_view key = line.substr(0, eq);
                std::string value(line.substr(eq + 1));
                if (key == "USERNAME")
                    current.username = value, any_field = true;
                else if (key == "USERID")
                    current.userid = value, any_field = true;
                else if (key == "HOSTID")
                    current.hostid = value, any_field = true;
                else if (key == "JOBNAME")
                    current.jobname = value, any_field = true;
                else if (key == "MODEL")
                    current.printer_model = value, any_field = true;
            }
        }
        if (nl == text.npos)
            break;
        pos = nl + 1;
    }
    flush();
    return out;
}

} // namespace jacklab::wire
