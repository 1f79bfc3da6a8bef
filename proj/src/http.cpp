#include "httplib.h"

#include "ace/service.hpp"

namespace ace {

void mount(httplib::Server& server, Api& api) {
  auto forward = [&api](const httplib::Request& req, httplib::Response& res) {
    auto out = api.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  server.Get(R"(/api/.*)", forward);
  server.Post(R"(/api/.*)", forward);
}

}  // namespace ace
