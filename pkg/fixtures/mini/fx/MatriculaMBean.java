package fx;

public class MatriculaMBean {

    private AlunoDAO dao;
    private Turma turma;

    public String matricular(String alunoId) {
        Aluno a = dao.buscar(alunoId);
        turma.addAluno(a);
        return confirmacao(a);
    }

    private String confirmacao(Aluno a) {
        return "ok " + a.getNome();
    }
}
