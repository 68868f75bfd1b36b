"""
Driving the HTTP session API
============================

Exercises the session endpoints in-process (no server needed): create
a session from a class summary, preview and commit statements, watch
the class size, and undo. `ancestral serve` exposes the same API over
a real socket.
"""

from fastapi.testclient import TestClient

from ancestral.service import app

client = TestClient(app)

SUMMARY = """nodes: A B C D
A o-o B
A o-o C
B o-o C
C o-o D
A o-o D
"""

state = client.post("/sessions", json={"graph": SUMMARY}).json()
sid = state["id"]
print("session", sid)
print("class size:",
      client.get("/sessions/%s/mec" % sid).json()["size"])

# preview without committing
preview = client.post("/sessions/%s/whatif" % sid,
                      json={"piece": "B *-> C"}).json()
print("whatif B *-> C would fire:",
      [t["rule"] for t in preview["trace"]])

# commit it
state = client.post("/sessions/%s/knowledge" % sid,
                    json={"piece": "B *-> C"}).json()
print("accepted:", state["accepted"])
print("restricted class size:",
      client.get("/sessions/%s/mec?restrict=true" % sid).json()["size"])

# the server refuses statements the committed marks contradict
res = client.post("/sessions/%s/knowledge" % sid,
                  json={"piece": "D --> A"})
print("D --> A ->", res.status_code, res.json()["detail"])

# undo rolls back to the previous state
state = client.post("/sessions/%s/undo" % sid).json()
print("after undo, accepted:", state["accepted"],
      "class size:", client.get("/sessions/%s/mec" % sid).json()["size"])
