#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "ace/lexicon.hpp"

namespace httplib {
class Server;
}

namespace ace {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

// Transport-free request handling. Requests for different sessions may run
// concurrently; requests for one session are serialized.
class Api {
 public:
  explicit Api(Lexicon base = {});
  ~Api();

  Response handle(const std::string& method, const std::string& path, const std::string& body);

 private:
  struct Entry;
  std::shared_ptr<Entry> session(const std::string& id);
  std::shared_ptr<Entry> execution_owner(const std::string& exec_id);

  Lexicon base_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::map<std::string, std::string> executions_;  // exec id -> session id
  long next_session_ = 1;
  long next_execution_ = 1;
};

// Routes /api/* of the server to the api.
void mount(httplib::Server& server, Api& api);

}  // namespace ace
