// Literal responses from the session service on the four-node example.
// Regenerate by replaying the same calls against a live server.

export const created = {
  "id": "s1",
  "graph": "nodes: A B C D\nA o-o B\nA o-o C\nA o-o D\nB o-o C\nC o-o D\n",
  "accepted": [],
  "admissible": [
    {
      "x": "A",
      "y": "B",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "A",
      "y": "C",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "A",
      "y": "D",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "B",
      "y": "C",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "C",
      "y": "D",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    }
  ],
  "canUndo": false
} as const;

export const mecFull = {
  "size": 35,
  "restricted": false
} as const;

export const whatifGood = {
  "id": "s1",
  "graph": "nodes: A B C D\nA o-o B\nA o-o C\nA --> D\nB o-> C\nC --> D\n",
  "accepted": [
    "B *-> C"
  ],
  "admissible": [
    {
      "x": "A",
      "y": "B",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "A",
      "y": "C",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "B",
      "y": "C",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": false,
          "reason": "mark at C on B-C is arrow, piece B <-- C needs tail"
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    }
  ],
  "canUndo": false,
  "trace": [
    {
      "rule": "K",
      "x": "B",
      "y": "C",
      "mark": "arrow",
      "witness": [
        "0",
        "B *-> C"
      ]
    },
    {
      "rule": "R1",
      "x": "C",
      "y": "D",
      "mark": "arrow",
      "witness": [
        "B",
        "C",
        "D"
      ]
    },
    {
      "rule": "R1",
      "x": "D",
      "y": "C",
      "mark": "tail",
      "witness": [
        "B",
        "C",
        "D"
      ]
    },
    {
      "rule": "R11",
      "x": "A",
      "y": "D",
      "mark": "arrow",
      "witness": [
        "A",
        "B",
        "C",
        "D"
      ]
    },
    {
      "rule": "R11",
      "x": "D",
      "y": "A",
      "mark": "tail",
      "witness": [
        "A",
        "B",
        "C",
        "D"
      ]
    }
  ]
} as const;

export const afterKnowledge = {
  "id": "s1",
  "graph": "nodes: A B C D\nA o-o B\nA o-o C\nA --> D\nB o-> C\nC --> D\n",
  "accepted": [
    "B *-> C"
  ],
  "admissible": [
    {
      "x": "A",
      "y": "B",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "A",
      "y": "C",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "B",
      "y": "C",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": false,
          "reason": "mark at C on B-C is arrow, piece B <-- C needs tail"
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    }
  ],
  "canUndo": true,
  "trace": [
    {
      "rule": "K",
      "x": "B",
      "y": "C",
      "mark": "arrow",
      "witness": [
        "0",
        "B *-> C"
      ]
    },
    {
      "rule": "R1",
      "x": "C",
      "y": "D",
      "mark": "arrow",
      "witness": [
        "B",
        "C",
        "D"
      ]
    },
    {
      "rule": "R1",
      "x": "D",
      "y": "C",
      "mark": "tail",
      "witness": [
        "B",
        "C",
        "D"
      ]
    },
    {
      "rule": "R11",
      "x": "A",
      "y": "D",
      "mark": "arrow",
      "witness": [
        "A",
        "B",
        "C",
        "D"
      ]
    },
    {
      "rule": "R11",
      "x": "D",
      "y": "A",
      "mark": "tail",
      "witness": [
        "A",
        "B",
        "C",
        "D"
      ]
    }
  ]
} as const;

export const mecRestricted = {
  "size": 13,
  "restricted": true
} as const;

export const whatifBadStatus = 409 as const;

export const whatifBad = {
  "error": "inadmissible piece",
  "detail": "mark at A on D-A is tail, piece D --> A needs arrow"
} as const;

export const verify = {
  "verdict": true,
  "report": {
    "edges": [],
    "residue": [],
    "final": "ok"
  }
} as const;

export const afterUndo = {
  "id": "s1",
  "graph": "nodes: A B C D\nA o-o B\nA o-o C\nA o-o D\nB o-o C\nC o-o D\n",
  "accepted": [],
  "admissible": [
    {
      "x": "A",
      "y": "B",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "A",
      "y": "C",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "A",
      "y": "D",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "B",
      "y": "C",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    },
    {
      "x": "C",
      "y": "D",
      "forms": {
        "-->": {
          "ok": true,
          "reason": null
        },
        "<--": {
          "ok": true,
          "reason": null
        },
        "*->": {
          "ok": true,
          "reason": null
        },
        "<-*": {
          "ok": true,
          "reason": null
        }
      }
    }
  ],
  "canUndo": false
} as const;

